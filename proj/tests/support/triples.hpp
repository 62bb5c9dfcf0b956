#pragma once

#include <array>
#include <cmath>
#include <random>

#include "inversive/minkowski.hpp"

namespace fixtures {

/// Three mutually externally tangent circles built by circle intersection.
/// With `enclosing`, the third one is an enclosing (negative) disk.
template <class Rng>
std::array<inversive::Circle, 3> random_tangent_triple(Rng &rng, bool enclosing = false) {
    std::uniform_real_distribution<double> pos(-5, 5), logr(std::log(0.1), std::log(10.0)), ang(0, 2 * M_PI),
        grow(0.05, 3.0);
    const double r1 = std::exp(logr(rng)), r2 = std::exp(logr(rng));
    const inversive::Point2 a{pos(rng), pos(rng)};
    const double phi = ang(rng);
    const inversive::Point2 b{a.x + (r1 + r2) * std::cos(phi), a.y + (r1 + r2) * std::sin(phi)};
    const double r3 = enclosing ? -(r1 + r2) * (1.0 + grow(rng)) : std::exp(logr(rng));

    const double da = std::abs(r1 + r3), db = std::abs(r2 + r3), ab = r1 + r2;
    const double along = (da * da - db * db + ab * ab) / (2 * ab);
    const double h = std::sqrt(std::max(0.0, da * da - along * along));
    const double ux = (b.x - a.x) / ab, uy = (b.y - a.y) / ab;
    const inversive::Point2 c{a.x + along * ux - h * uy, a.y + along * uy + h * ux};
    return {inversive::Circle{a, r1}, inversive::Circle{b, r2}, inversive::Circle{c, r3}};
}

}  // namespace fixtures
