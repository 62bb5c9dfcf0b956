#include "inversive/descartes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "inversive/error.hpp"

#include "compensated.hpp"

namespace inversive {

double descartes_residual(double a, double b, double c, double d) {
    const double s = a + b + c + d;
    return s * s - 2.0 * (a * a + b * b + c * c + d * d);
}

std::pair<double, double> solve_fourth_curvature(double a, double b, double c) {
    double disc = a * b + b * c + c * a;
    if (disc < -1e-12)
        throw GeometryError(ErrorKind::ComplexRoots,
                            "no real tangent disk: ab + bc + ca = " + std::to_string(disc));
    disc = std::max(disc, 0.0);

    // d^2 - 2 S d + (Q - 2 disc) = 0 with S = a+b+c, Q = a^2+b^2+c^2.
    const double sum = a + b + c;
    const double root = 2.0 * std::sqrt(disc);
    const double product = a * a + b * b + c * c - 2.0 * disc;
    const double big = sum >= 0.0 ? sum + root : sum - root;
    const double small = big != 0.0 ? product / big : 0.0;
    return {std::max(big, small), std::min(big, small)};
}

TangencyDefect worst_tangency(std::span<const CircleVector> c) {
    if (c.size() < 2) throw std::invalid_argument("tangency check needs at least two disks");
    TangencyDefect worst{0, 1, -1.0};
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const double r = std::abs(inner(c[i], c[j]) - 1.0);
            if (r > worst.residual || std::isnan(r)) worst = {i, j, r};
        }
    return worst;
}

double tangency_residual(std::span<const CircleVector> c) {
    if (c.size() != 3 && c.size() != 4) throw std::invalid_argument("tangency_residual expects 3 or 4 disks");
    return worst_tangency(c).residual;
}

QuadrupleDefect quadruple_defect(const Quadruple &q) {
    QuadrupleDefect d;
    for (const auto &v : q.c) d.normalization = std::max(d.normalization, std::abs(inner(v, v) + 1.0));
    d.tangency = tangency_residual(q.c);
    return d;
}

namespace {

// Snaps a numerically-zero curvature to an exact halfplane and restores
// unit length.
CircleVector polish(const CircleVector &v) {
    const double scale = std::max({std::abs(v.xdot), std::abs(v.ydot), std::abs(v.gamma), 1.0});
    Vec4 raw = v.to_array();
    if (std::abs(v.beta) <= 1e-12 * scale) raw[2] = 0.0;
    return normalize(raw);
}

bool ordered_before(const CircleVector &a, const CircleVector &b) {
    if (a.beta != b.beta) return a.beta > b.beta;
    return a.to_array() > b.to_array();
}

}  // namespace

std::pair<CircleVector, CircleVector> solve_fourth_disk(const CircleVector &c1, const CircleVector &c2,
                                                        const CircleVector &c3) {
    const std::array<CircleVector, 3> triple{c1, c2, c3};

    // Row i is (g c_i)^T augmented with the right-hand side 1.
    std::array<std::array<double, 5>, 3> m{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto &c = triple[i];
        m[i] = {-c.xdot, -c.ydot, 0.5 * c.gamma, 0.5 * c.beta, 1.0};
    }
    std::array<std::size_t, 4> cols{0, 1, 2, 3};
    std::array<double, 3> pivots{};

    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t best_r = k, best_c = k;
        for (std::size_t r = k; r < 3; ++r)
            for (std::size_t c = k; c < 4; ++c)
                if (std::abs(m[r][cols[c]]) > std::abs(m[best_r][cols[best_c]])) {
                    best_r = r;
                    best_c = c;
                }
        std::swap(m[k], m[best_r]);
        std::swap(cols[k], cols[best_c]);
        const double p = m[k][cols[k]];
        pivots[k] = std::abs(p);
        if (p == 0.0) break;
        for (std::size_t r = k + 1; r < 3; ++r) {
            const double factor = m[r][cols[k]] / p;
            for (std::size_t j = 0; j < 5; ++j) m[r][j] -= factor * m[k][j];
        }
    }
    const double largest = *std::max_element(pivots.begin(), pivots.end());
    const double smallest = *std::min_element(pivots.begin(), pivots.end());
    if (!(largest > 0.0) || smallest < 1e-10 * largest)
        throw GeometryError(ErrorKind::DegenerateTriple, "the three disks do not constrain a unique line of solutions");

    const TangencyDefect defect = worst_tangency(triple);
    if (!(defect.residual <= kTangentTripleTolerance))
        throw GeometryError(ErrorKind::NotTangent, "disks " + std::to_string(defect.i + 1) + " and " +
                                                       std::to_string(defect.j + 1) + " are not tangent (residual " +
                                                       std::to_string(defect.residual) + ")");

    auto back_substitute = [&](double free_value, double rhs_scale) {
        Vec4 x{};
        x[cols[3]] = free_value;
        for (std::size_t k = 3; k-- > 0;) {
            double acc = rhs_scale * m[k][4];
            for (std::size_t j = k + 1; j < 4; ++j) acc -= m[k][cols[j]] * x[cols[j]];
            x[cols[k]] = acc / m[k][cols[k]];
        }
        return x;
    };
    const Vec4 p = back_substitute(0.0, 1.0);
    Vec4 n = back_substitute(1.0, 0.0);
    const double n_len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] + n[3] * n[3]);
    for (double &v : n) v /= n_len;

    // <P + tN, P + tN> = -1
    const double qa = inner(n, n);
    const double qb = 2.0 * inner(p, n);
    const double qc = inner(p, p) + 1.0;
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
        if (disc < -1e-12 * std::max(qb * qb, std::abs(4.0 * qa * qc)))
            throw GeometryError(ErrorKind::ComplexRoots, "no real disk is tangent to all three");
        disc = 0.0;
    }
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    const double t1 = q / qa;
    const double t2 = q != 0.0 ? qc / q : t1;

    auto point = [&](double t) {
        return polish(CircleVector{p[0] + t * n[0], p[1] + t * n[1], p[2] + t * n[2], p[3] + t * n[3]});
    };
    CircleVector first = point(t1), second = point(t2);
    if (ordered_before(second, first)) std::swap(first, second);
    return {first, second};
}

Quadruple vieta_reflect(const Quadruple &q, std::size_t i) {
    if (i > 3) throw GeometryError(ErrorKind::InvalidIndex, "reflection index " + std::to_string(i) + " out of range");
    // 2(sum of others) - c_i, rounded once per component
    Vec4 reflected{};
    for (std::size_t k = 0; k < 4; ++k) {
        detail::CompensatedSum sum;
        for (std::size_t j = 0; j < 4; ++j) sum.add(j == i ? -q.c[j].to_array()[k] : 2.0 * q.c[j].to_array()[k]);
        reflected[k] = sum.value();
    }
    Quadruple out = q;
    out.c[i] = CircleVector::from_array(reflected);
    return out;
}

}  // namespace inversive
