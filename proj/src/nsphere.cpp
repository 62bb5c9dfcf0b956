#include "inversive/nsphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "compensated.hpp"
#include "inversive/error.hpp"

namespace inversive {

namespace {

void require_dimension(int n) {
    if (n < 2) throw GeometryError(ErrorKind::BadDimension, "dimension must be at least 2, got " + std::to_string(n));
}

}  // namespace

NMetric metric_g_n(int n) {
    require_dimension(n);
    const std::size_t m = std::size_t(n) + 2;
    NMetric out{Matrix(m, m), Matrix(m, m)};
    for (std::size_t i = 0; i < std::size_t(n); ++i) {
        out.g(i, i) = -1.0;
        out.G(i, i) = -1.0;
    }
    out.g(m - 2, m - 1) = out.g(m - 1, m - 2) = 0.5;
    out.G(m - 2, m - 1) = out.G(m - 1, m - 2) = 2.0;
    return out;
}

NVector lift_n(const NSphere &s) {
    require_dimension(int(s.dim()));
    if (!std::isfinite(s.radius)) throw GeometryError(ErrorKind::ZeroRadius, "sphere radius must be finite");
    if (s.radius == 0.0) throw GeometryError(ErrorKind::ZeroRadius, "sphere radius must be nonzero");
    const double r = s.radius;
    NVector v;
    v.coords.reserve(s.dim() + 2);
    double norm2 = 0.0;
    for (double x : s.center) {
        v.coords.push_back(x / r);
        norm2 += x * x;
    }
    v.coords.push_back(1.0 / r);
    v.coords.push_back((norm2 - r * r) / r);
    return v;
}

double inner_n(const NVector &u, const NVector &v) {
    if (u.coords.size() != v.coords.size())
        throw GeometryError(ErrorKind::BadDimension, "vectors of different dimension");
    detail::CompensatedSum acc;
    for (std::size_t k = 0; k < u.dim(); ++k) acc.add_product(-u.coords[k], v.coords[k]);
    acc.add_product(0.5 * u.beta(), v.gamma());
    acc.add_product(0.5 * v.beta(), u.gamma());
    return acc.value();
}

Matrix gramian_n(std::span<const NVector> spheres) {
    const std::size_t m = spheres.size();
    Matrix f(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) f(i, j) = f(j, i) = inner_n(spheres[i], spheres[j]);
    return f;
}

double verify_generalized_n(std::span<const NVector> spheres, int n) {
    require_dimension(n);
    const std::size_t m = std::size_t(n) + 2;
    if (spheres.size() != m)
        throw GeometryError(ErrorKind::BadDimension,
                            "expected " + std::to_string(m) + " spheres, got " + std::to_string(spheres.size()));
    Matrix d(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        if (spheres[j].coords.size() != m)
            throw GeometryError(ErrorKind::BadDimension, "sphere " + std::to_string(j + 1) + " has the wrong dimension");
        for (std::size_t i = 0; i < m; ++i) d(i, j) = spheres[j].coords[i];
    }
    const Matrix lhs = d * invert(gramian_n(spheres)) * d.transposed();
    return max_abs_entry(lhs - metric_g_n(n).G);
}

double soddy_gosset_residual(std::span<const double> curvatures, int n) {
    require_dimension(n);
    if (curvatures.size() != std::size_t(n) + 2)
        throw GeometryError(ErrorKind::BadDimension, "expected " + std::to_string(n + 2) + " curvatures, got " +
                                                         std::to_string(curvatures.size()));
    double sum = 0.0, sum_sq = 0.0;
    for (double b : curvatures) {
        sum += b;
        sum_sq += b * b;
    }
    return sum * sum - n * sum_sq;
}

std::vector<NSphere> canonical_simplex_config(int n, bool outer) {
    require_dimension(n);
    const std::size_t dim = std::size_t(n);
    // Vertex i of the simplex is sqrt(2) e_i in R^{n+1}; its coordinates in
    // the Helmert basis of the sum-zero hyperplane are sqrt(2) u_k[i].
    std::vector<NSphere> out;
    out.reserve(dim + 2);
    for (std::size_t i = 0; i <= dim; ++i) {
        NSphere s{std::vector<double>(dim, 0.0), 1.0};
        for (std::size_t k = 1; k <= dim; ++k) {
            double u = 0.0;
            if (i < k) u = 1.0;
            else if (i == k) u = -double(k);
            s.center[k - 1] = std::sqrt(2.0) * u / std::sqrt(double(k) * double(k + 1));
        }
        out.push_back(std::move(s));
    }
    const double circumradius = std::sqrt(2.0 * n / (n + 1.0));
    out.push_back({std::vector<double>(dim, 0.0), outer ? -(circumradius + 1.0) : circumradius - 1.0});
    return out;
}

}  // namespace inversive
