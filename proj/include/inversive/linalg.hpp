#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace inversive {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

/// Dense square-or-rectangular matrix, row-major, value semantics.
/// Sized for the handful of (n+2)x(n+2) Gramians this library builds.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n);
    static Matrix from(const Mat4 &m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> data() { return data_; }
    std::span<const double> data() const { return data_; }

    Matrix transposed() const;
    Mat4 to_mat4() const;

    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double max_abs_entry(const Matrix &m);
double max_abs_entry(const Mat4 &m);

Mat4 multiply(const Mat4 &a, const Mat4 &b);
Mat4 transpose(const Mat4 &m);
Mat4 identity4();

/// Gauss-Jordan inversion with partial (row) pivoting.
///
/// Throws GeometryError{SingularMatrix} when |det m| < 1e-12 * (max |m_ij|)^n,
/// where n is the matrix order; the zero matrix is always singular.
Matrix invert(const Matrix &m);

/// Fixed-size wrapper over invert(); same singularity gate with n = 4.
Mat4 invert4(const Mat4 &m);

/// 1-norm condition number ||m||_1 * ||m^-1||_1. Propagates SingularMatrix.
double condition_number(const Matrix &m);
double condition_number(const Mat4 &m);

}  // namespace inversive
