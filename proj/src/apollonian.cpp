#include "inversive/apollonian.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "inversive/error.hpp"

namespace inversive {

namespace {

struct KeyHash {
    std::size_t operator()(const DedupKey &k) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto v : k) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::int64_t quantize(double value, double step) {
    const double q = std::round(value / step);
    constexpr double limit = 9.0e18;
    return static_cast<std::int64_t>(std::clamp(q, -limit, limit));
}

void check_limits(const GenerationLimits &limits) {
    if (!limits.max_depth && !limits.max_curvature && !limits.max_count)
        throw GeometryError(ErrorKind::InvalidLimits, "at least one generation limit must be set");
    if (limits.max_depth && *limits.max_depth < 0)
        throw GeometryError(ErrorKind::InvalidLimits, "max_depth must be non-negative");
    if (limits.max_curvature && !(*limits.max_curvature > 0.0))
        throw GeometryError(ErrorKind::InvalidLimits, "max_curvature must be positive");
}

}  // namespace

DedupKey dedup_key(const CircleVector &v) {
    const double step = 1e-7 * std::max(1.0, std::abs(v.beta));
    return {quantize(v.xdot, step), quantize(v.ydot, step), quantize(v.beta, step), quantize(v.gamma, step)};
}

Gasket generate(const Quadruple &seed, const GenerationLimits &limits) {
    check_limits(limits);
    const QuadrupleDefect defect = quadruple_defect(seed);
    if (!defect.acceptable())
        throw GeometryError(ErrorKind::InvalidSeed, "seed is not a Descartes quadruple (normalization error " +
                                                        std::to_string(defect.normalization) + ", tangency error " +
                                                        std::to_string(defect.tangency) + ")");

    Gasket g;
    g.seed = seed;
    g.limits = limits;
    g.quadruples.push_back({seed, 0, std::nullopt, std::nullopt});

    std::unordered_set<DedupKey, KeyHash> seen;
    for (const auto &v : seed.c) {
        g.disks.push_back({v, 0, std::nullopt, 0});
        seen.insert(dedup_key(v));
    }

    auto full = [&] { return limits.max_count && g.disks.size() >= *limits.max_count; };

    std::deque<std::size_t> frontier{0};
    while (!frontier.empty() && !full()) {
        const std::size_t id = frontier.front();
        frontier.pop_front();
        // Copy: push_back below may reallocate.
        const GasketQuadruple node = g.quadruples[id];
        if (limits.max_depth && node.depth >= *limits.max_depth) continue;

        for (std::size_t slot = 0; slot < 4 && !full(); ++slot) {
            if (node.created_index == slot) continue;
            Quadruple child = vieta_reflect(node.quadruple, slot);
            const CircleVector &fresh = child.c[slot];
            if (limits.max_curvature && fresh.beta > *limits.max_curvature) continue;
            if (!seen.insert(dedup_key(fresh)).second) continue;

            const std::size_t child_id = g.quadruples.size();
            g.quadruples.push_back({child, node.depth + 1, id, slot});
            g.disks.push_back({fresh, node.depth + 1, id, child_id});
            frontier.push_back(child_id);
        }
    }
    return g;
}

std::vector<SpectrumLine> curvature_spectrum(const Gasket &g) {
    std::vector<double> betas;
    betas.reserve(g.disks.size());
    for (const auto &d : g.disks) betas.push_back(d.vector.beta);
    std::sort(betas.begin(), betas.end());

    std::vector<SpectrumLine> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= betas.size(); ++i) {
        const bool split =
            i == betas.size() || betas[i] - betas[start] > 1e-7 * std::max(1.0, std::abs(betas[start]));
        if (!split) continue;
        const double mean = std::accumulate(betas.begin() + start, betas.begin() + i, 0.0) / double(i - start);
        out.push_back({mean, i - start});
        start = i;
    }
    return out;
}

Quadruple canonical_quadruple(std::span<const double> curvatures) {
    if (curvatures.size() != 3 && curvatures.size() != 4)
        throw GeometryError(ErrorKind::InvalidSeed, "a seed needs 3 or 4 curvatures");
    for (double k : curvatures)
        if (!std::isfinite(k)) throw GeometryError(ErrorKind::InvalidSeed, "seed curvatures must be finite");

    std::array<double, 4> k{};
    std::copy(curvatures.begin(), curvatures.end(), k.begin());
    if (curvatures.size() == 3) {
        k[3] = solve_fourth_curvature(k[0], k[1], k[2]).first;
    } else {
        const double scale = std::max(1.0, k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + k[3] * k[3]);
        const double residual = descartes_residual(k[0], k[1], k[2], k[3]);
        if (std::abs(residual) > 1e-9 * scale)
            throw GeometryError(ErrorKind::InvalidSeed,
                                "curvatures violate the Descartes relation (residual " + std::to_string(residual) + ")");
    }

    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return k[a] > k[b]; });
    const double k1 = k[order[0]], k2 = k[order[1]], k3 = k[order[2]], k4 = k[order[3]];
    if (!(k2 > 0.0)) throw GeometryError(ErrorKind::InvalidSeed, "a seed needs at least two positive curvatures");

    const double r1 = 1.0 / k1, r2 = 1.0 / k2;
    const Circle a{{-r1, 0.0}, r1};
    const Circle b{{r2, 0.0}, r2};
    Disk third;
    if (k3 == 0.0) {
        if (std::abs(r1 - r2) > 1e-9 * r1)
            throw GeometryError(ErrorKind::InvalidSeed, "a zero curvature needs two equal circles");
        third = Halfplane{{0.0, 1.0}, -r1};
    } else {
        const double r3 = 1.0 / k3;
        const double da = std::abs(r1 + r3), db = std::abs(r2 + r3), ab = r1 + r2;
        const double along = (da * da - db * db + ab * ab) / (2.0 * ab);
        const double h2 = da * da - along * along;
        if (h2 < -1e-12 * da * da) throw GeometryError(ErrorKind::InvalidSeed, "third circle cannot touch the first two");
        third = Circle{{a.center.x + along, std::sqrt(std::max(h2, 0.0))}, r3};
    }

    const CircleVector va = lift(a), vb = lift(b), vc = lift(third);
    const auto [first, second] = solve_fourth_disk(va, vb, vc);
    const CircleVector vd = std::abs(first.beta - k4) <= std::abs(second.beta - k4) ? first : second;
    if (std::abs(vd.beta - k4) > 1e-6 * std::max(1.0, std::abs(k4)))
        throw GeometryError(ErrorKind::InvalidSeed, "could not place a disk of curvature " + std::to_string(k4));

    Quadruple q;
    q.c[order[0]] = va;
    q.c[order[1]] = vb;
    q.c[order[2]] = vc;
    q.c[order[3]] = vd;
    return q;
}

}  // namespace inversive
