#include "inversive/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "inversive/error.hpp"

namespace inversive {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from(const Mat4 &m) {
    Matrix r(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = m[i][j];
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Mat4 Matrix::to_mat4() const {
    if (rows_ != 4 || cols_ != 4) throw std::invalid_argument("Matrix::to_mat4 requires a 4x4 matrix");
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[i][j] = (*this)(i, j);
    return r;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shapes differ");
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
}

double max_abs_entry(const Matrix &m) {
    double best = 0.0;
    for (double v : m.data()) best = std::max(best, std::abs(v));
    return best;
}

double max_abs_entry(const Mat4 &m) {
    double best = 0.0;
    for (const auto &row : m)
        for (double v : row) best = std::max(best, std::abs(v));
    return best;
}

Mat4 multiply(const Mat4 &a, const Mat4 &b) {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat4 transpose(const Mat4 &m) {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[j][i] = m[i][j];
    return r;
}

Mat4 identity4() {
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i) r[i][i] = 1.0;
    return r;
}

Matrix invert(const Matrix &m) {
    const std::size_t n = m.rows();
    if (n == 0 || m.cols() != n) throw std::invalid_argument("invert: matrix must be square and non-empty");

    const double scale = max_abs_entry(m);
    auto singular = [n] {
        return GeometryError(ErrorKind::SingularMatrix,
                             "matrix of order " + std::to_string(n) + " is singular to working precision");
    };
    if (!(scale > 0.0) || !std::isfinite(scale)) throw singular();

    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    // det is tracked relative to scale^n so the gate cannot overflow.
    double rel_det = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
            rel_det = -rel_det;
        }
        const double p = a(col, col);
        rel_det *= p / scale;
        if (p == 0.0) throw singular();

        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = a(r, col);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
                inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    if (std::abs(rel_det) < 1e-12) throw singular();
    return inv;
}

Mat4 invert4(const Mat4 &m) { return invert(Matrix::from(m)).to_mat4(); }

namespace {

double norm1(const Matrix &m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) sum += std::abs(m(i, j));
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace

double condition_number(const Matrix &m) { return norm1(m) * norm1(invert(m)); }

double condition_number(const Mat4 &m) { return condition_number(Matrix::from(m)); }

}  // namespace inversive
