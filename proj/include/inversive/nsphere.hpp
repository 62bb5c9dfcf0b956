#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "inversive/linalg.hpp"

namespace inversive {

/// (n-1)-sphere in R^n with signed radius.
struct NSphere {
    std::vector<double> center;
    double radius = 1.0;

    std::size_t dim() const { return center.size(); }
};

/// Lift of an NSphere to R^{n+1,1}: (x_1/r, ..., x_n/r, 1/r, (|x|^2 - r^2)/r).
struct NVector {
    std::vector<double> coords;

    std::size_t dim() const { return coords.size() - 2; }
    double beta() const { return coords[coords.size() - 2]; }
    double gamma() const { return coords.back(); }
};

struct NMetric {
    Matrix g;  ///< -I_n (+) [[0, 1/2], [1/2, 0]]
    Matrix G;  ///< g^{-1} = -I_n (+) [[0, 2], [2, 0]]
};

/// Throws BadDimension for n < 2.
NMetric metric_g_n(int n);

/// Throws ZeroRadius, or BadDimension when the center has fewer than 2 components.
NVector lift_n(const NSphere &s);

double inner_n(const NVector &u, const NVector &v);

/// (n+2)x(n+2) matrix of pairwise products.
Matrix gramian_n(std::span<const NVector> spheres);

/// Max |entry| of D f^{-1} D^T - G_n for exactly n+2 lifted spheres.
/// Throws BadDimension on a count/dimension mismatch and SingularMatrix on
/// a degenerate configuration.
double verify_generalized_n(std::span<const NVector> spheres, int n);

/// (sum b)^2 - n * sum b^2 over n+2 curvatures. Throws BadDimension.
double soddy_gosset_residual(std::span<const double> curvatures, int n);

/// n+1 unit spheres on the vertices of a regular n-simplex with edge 2
/// centred at the origin, followed by the sphere at the origin that touches
/// all of them: radius R-1 (inner) or -(R+1) (outer, enclosing), with
/// R = sqrt(2n/(n+1)) the circumradius.
std::vector<NSphere> canonical_simplex_config(int n, bool outer);

}  // namespace inversive
