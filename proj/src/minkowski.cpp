#include "inversive/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "compensated.hpp"
#include "inversive/error.hpp"

namespace inversive {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroRadius: return "ZeroRadius";
        case ErrorKind::NonUnitNormal: return "NonUnitNormal";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::NotSpacelike: return "NotSpacelike";
        case ErrorKind::SingularMatrix: return "DegenerateConfiguration";
        case ErrorKind::ComplexRoots: return "ComplexRoots";
        case ErrorKind::NotTangent: return "NotTangent";
        case ErrorKind::DegenerateTriple: return "DegenerateTriple";
        case ErrorKind::InvalidIndex: return "InvalidIndex";
        case ErrorKind::InvalidSeed: return "InvalidSeed";
        case ErrorKind::InvalidLimits: return "InvalidLimits";
        case ErrorKind::EmptyGasket: return "EmptyGasket";
        case ErrorKind::BadDimension: return "BadDimension";
    }
    return "Unknown";
}

namespace {

struct Validator {
    void operator()(const Circle &c) const {
        if (!std::isfinite(c.center.x) || !std::isfinite(c.center.y) || !std::isfinite(c.radius))
            throw std::invalid_argument("circle fields must be finite");
        if (c.radius == 0.0) throw GeometryError(ErrorKind::ZeroRadius, "circle radius must be nonzero");
    }
    void operator()(const Halfplane &h) const {
        if (!std::isfinite(h.normal.x) || !std::isfinite(h.normal.y) || !std::isfinite(h.offset))
            throw std::invalid_argument("halfplane fields must be finite");
        double norm = std::hypot(h.normal.x, h.normal.y);
        if (std::abs(norm - 1.0) > kUnitNormalTolerance)
            throw GeometryError(ErrorKind::NonUnitNormal,
                                "halfplane normal has length " + std::to_string(norm) + ", expected 1");
    }
};

struct Lifter {
    CircleVector operator()(const Circle &c) const {
        const double x = c.center.x, y = c.center.y, r = c.radius;
        return {x / r, y / r, 1.0 / r, (x * x + y * y - r * r) / r};
    }
    CircleVector operator()(const Halfplane &h) const {
        return {-h.normal.x, -h.normal.y, 0.0, -2.0 * h.offset};
    }
};

}  // namespace

void validate(const Disk &d) { std::visit(Validator{}, d); }

CircleVector lift(const Disk &d) {
    validate(d);
    return std::visit(Lifter{}, d);
}

// The four products are large and cancel for small or distant disks
// (tangent pairs sum to 1 from terms of size |x|^2 / r^2), so the sum is
// accumulated with compensation.
double inner(const CircleVector &u, const CircleVector &v) {
    detail::CompensatedSum acc;
    acc.add_product(-u.xdot, v.xdot);
    acc.add_product(-u.ydot, v.ydot);
    acc.add_product(0.5 * u.beta, v.gamma);
    acc.add_product(0.5 * v.beta, u.gamma);
    return acc.value();
}

double normalization_scale(const CircleVector &v) {
    return std::max(1.0, v.xdot * v.xdot + v.ydot * v.ydot + std::abs(v.beta * v.gamma));
}

double inner(const Vec4 &u, const Vec4 &v) {
    return inner(CircleVector::from_array(u), CircleVector::from_array(v));
}

Disk project(const CircleVector &v) {
    const double self = inner(v, v);
    if (!(std::abs(self + 1.0) <= kNormalizationGate * normalization_scale(v)))
        throw GeometryError(ErrorKind::NotNormalized,
                            "vector is not a unit circle vector: <v,v> = " + std::to_string(self));
    if (v.beta == 0.0) {
        double nx = -v.xdot, ny = -v.ydot;
        const double norm = std::hypot(nx, ny);
        return Halfplane{{nx / norm, ny / norm}, -v.gamma / (2.0 * norm)};
    }
    const double r = 1.0 / v.beta;
    return Circle{{v.xdot * r, v.ydot * r}, r};
}

CircleVector normalize(const Vec4 &v) {
    const double self = inner(v, v);
    if (!(self < -1e-12))
        throw GeometryError(ErrorKind::NotSpacelike,
                            "vector is not space-like: <v,v> = " + std::to_string(self));
    const double s = 1.0 / std::sqrt(-self);
    return {s * v[0], s * v[1], s * v[2], s * v[3]};
}

double inner_geometric(const Disk &a, const Disk &b) {
    validate(a);
    validate(b);
    const auto *ca = std::get_if<Circle>(&a);
    const auto *cb = std::get_if<Circle>(&b);
    if (ca == nullptr || cb == nullptr) return inner(lift(a), lift(b));
    const double dx = ca->center.x - cb->center.x;
    const double dy = ca->center.y - cb->center.y;
    const double r1 = ca->radius, r2 = cb->radius;
    return (dx * dx + dy * dy - r1 * r1 - r2 * r2) / (2.0 * r1 * r2);
}

std::optional<double> intersection_angle(const Disk &a, const Disk &b) {
    const double p = inner_geometric(a, b);
    if (std::abs(p) > 1.0) return std::nullopt;
    return std::acos(p);
}

Mat4 column_matrix(std::span<const CircleVector, 4> c) {
    Mat4 d{};
    for (std::size_t j = 0; j < 4; ++j) {
        const Vec4 col = c[j].to_array();
        for (std::size_t i = 0; i < 4; ++i) d[i][j] = col[i];
    }
    return d;
}

Mat4 gramian(std::span<const CircleVector, 4> c) {
    Mat4 f{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) f[i][j] = f[j][i] = inner(c[i], c[j]);
    return f;
}

double verify_generalized(std::span<const CircleVector, 4> c) {
    const Mat4 d = column_matrix(c);
    const Mat4 f_inv = invert4(gramian(c));
    const Mat4 lhs = multiply(multiply(d, f_inv), transpose(d));
    double residual = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) residual = std::max(residual, std::abs(lhs[i][j] - kInverseMetric[i][j]));
    return residual;
}

}  // namespace inversive
