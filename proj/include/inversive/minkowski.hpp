#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>

#include "inversive/linalg.hpp"

namespace inversive {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2 &, const Point2 &) = default;
};

/// Disk bounded by a circle. A negative radius denotes the unbounded disk
/// outside the circle (an enclosing disk in a packing).
struct Circle {
    Point2 center;
    double radius = 1.0;

    friend bool operator==(const Circle &, const Circle &) = default;
};

/// Curvature-zero disk {p : normal . p <= offset}; normal is a unit vector.
struct Halfplane {
    Point2 normal;
    double offset = 0.0;

    friend bool operator==(const Halfplane &, const Halfplane &) = default;
};

using Disk = std::variant<Circle, Halfplane>;

/// Unit space-like vector of R^{3,1} representing a disk:
/// (x/r, y/r, 1/r, (x^2 + y^2 - r^2)/r).
struct CircleVector {
    double xdot = 0.0;
    double ydot = 0.0;
    double beta = 0.0;   ///< curvature
    double gamma = 0.0;  ///< co-curvature

    Vec4 to_array() const { return {xdot, ydot, beta, gamma}; }
    static CircleVector from_array(const Vec4 &v) { return {v[0], v[1], v[2], v[3]}; }

    bool is_halfplane() const { return beta == 0.0; }

    CircleVector &operator+=(const CircleVector &o) {
        xdot += o.xdot;
        ydot += o.ydot;
        beta += o.beta;
        gamma += o.gamma;
        return *this;
    }
    friend CircleVector operator+(CircleVector a, const CircleVector &b) { return a += b; }
    friend CircleVector operator-(const CircleVector &a, const CircleVector &b) {
        return {a.xdot - b.xdot, a.ydot - b.ydot, a.beta - b.beta, a.gamma - b.gamma};
    }
    friend CircleVector operator*(double s, const CircleVector &v) {
        return {s * v.xdot, s * v.ydot, s * v.beta, s * v.gamma};
    }
    friend bool operator==(const CircleVector &, const CircleVector &) = default;
};

// Metric of R^{3,1} in the (x, y, beta, gamma) basis and its inverse.
// All entries are dyadic, so g * G == I holds exactly in floating point.
inline constexpr Mat4 kMetric{{
    {-1.0, 0.0, 0.0, 0.0},
    {0.0, -1.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 0.5},
    {0.0, 0.0, 0.5, 0.0},
}};
inline constexpr Mat4 kInverseMetric{{
    {-1.0, 0.0, 0.0, 0.0},
    {0.0, -1.0, 0.0, 0.0},
    {0.0, 0.0, 0.0, 2.0},
    {0.0, 0.0, 2.0, 0.0},
}};

inline constexpr double kNormalizationGate = 1e-6;
inline constexpr double kUnitNormalTolerance = 1e-12;

/// Throws ZeroRadius / NonUnitNormal (or std::invalid_argument for
/// non-finite fields) when the disk violates its invariants.
void validate(const Disk &d);

CircleVector lift(const Disk &d);

/// max(1, xdot^2 + ydot^2 + |beta gamma|): the size of the terms that
/// cancel in <v,v>. Rounding error in <v,v> is proportional to it.
double normalization_scale(const CircleVector &v);

/// Inverse of lift. beta == 0 exactly yields a Halfplane.
/// Throws NotNormalized if |<v,v> + 1| > 1e-6 * normalization_scale(v).
Disk project(const CircleVector &v);

/// Rescales a space-like vector to unit length, keeping its orientation.
/// Throws NotSpacelike if <v,v> >= -1e-12.
CircleVector normalize(const Vec4 &v);

double inner(const CircleVector &u, const CircleVector &v);
double inner(const Vec4 &u, const Vec4 &v);

/// Inversive product (d^2 - r1^2 - r2^2) / (2 r1 r2) from centers and
/// signed radii. Halfplane arguments go through inner(lift, lift).
double inner_geometric(const Disk &a, const Disk &b);

/// arccos of the inversive product when it lies in [-1, 1]; empty otherwise.
std::optional<double> intersection_angle(const Disk &a, const Disk &b);

/// D with the four vectors as columns.
Mat4 column_matrix(std::span<const CircleVector, 4> c);

/// Configuration matrix f_ij = <c_i, c_j>, i.e. D^T g D.
Mat4 gramian(std::span<const CircleVector, 4> c);

/// Max |entry| of D f^{-1} D^T - G. Throws SingularMatrix when f is singular.
double verify_generalized(std::span<const CircleVector, 4> c);

}  // namespace inversive
