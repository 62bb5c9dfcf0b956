#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>

#include "inversive/minkowski.hpp"

namespace inversive {

/// Four mutually externally tangent disks: <c_i, c_i> = -1 and
/// <c_i, c_j> = 1 for i != j. The curvature vector B is the beta row.
struct Quadruple {
    std::array<CircleVector, 4> c;

    std::span<const CircleVector, 4> vectors() const { return c; }
    std::array<double, 4> curvatures() const { return {c[0].beta, c[1].beta, c[2].beta, c[3].beta}; }

    friend bool operator==(const Quadruple &, const Quadruple &) = default;
};

inline constexpr double kQuadrupleNormTolerance = 1e-9;
inline constexpr double kQuadrupleTangencyTolerance = 1e-6;
inline constexpr double kTangentTripleTolerance = 1e-6;

/// (a+b+c+d)^2 - 2(a^2+b^2+c^2+d^2); zero for a Descartes quadruple.
double descartes_residual(double a, double b, double c, double d);

/// Both curvatures d completing (a, b, c) to a Descartes quadruple,
/// larger first. A discriminant ab+bc+ca in [-1e-12, 0) is treated as a
/// double root; anything lower throws ComplexRoots.
std::pair<double, double> solve_fourth_curvature(double a, double b, double c);

struct TangencyDefect {
    std::size_t i = 0;
    std::size_t j = 0;
    double residual = 0.0;  ///< |<c_i, c_j> - 1|
};

/// The pair that is furthest from external tangency.
TangencyDefect worst_tangency(std::span<const CircleVector> c);

/// max over i != j of |<c_i, c_j> - 1|; expects 3 or 4 vectors.
double tangency_residual(std::span<const CircleVector> c);

/// Largest deviation of q from the Quadruple invariants, split into the
/// normalization and tangency parts.
struct QuadrupleDefect {
    double normalization = 0.0;
    double tangency = 0.0;

    bool acceptable() const {
        return normalization <= kQuadrupleNormTolerance && tangency <= kQuadrupleTangencyTolerance;
    }
};
QuadrupleDefect quadruple_defect(const Quadruple &q);

/// The two unit vectors X with <X, c_i> = 1 for the three given tangent
/// disks, larger curvature first.
///
/// The three linear constraints are reduced by fully pivoted elimination
/// to an affine line P + tN, which is intersected with <X, X> = -1.
/// Throws DegenerateTriple (rank < 3, checked first), NotTangent or
/// ComplexRoots.
std::pair<CircleVector, CircleVector> solve_fourth_disk(const CircleVector &c1, const CircleVector &c2,
                                                        const CircleVector &c3);

/// Replaces c_i by 2(c_j + c_k + c_l) - c_i. Involutive; preserves the
/// Gramian. Throws InvalidIndex for i > 3.
Quadruple vieta_reflect(const Quadruple &q, std::size_t i);

}  // namespace inversive
