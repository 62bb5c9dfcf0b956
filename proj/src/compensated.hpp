#pragma once

#include <cmath>

namespace inversive::detail {

/// Dot-product accumulator carrying the rounding error of every product
/// (via fma) and every addition (TwoSum). The result is as accurate as if
/// computed in twice the working precision and then rounded.
class CompensatedSum {
public:
    void add(double p) {
        const double t = sum_ + p;
        const double z = t - sum_;
        error_ += (sum_ - (t - z)) + (p - z);
        sum_ = t;
    }
    void add_product(double a, double b) {
        const double p = a * b;
        error_ += std::fma(a, b, -p);
        add(p);
    }
    double value() const { return sum_ + error_; }

private:
    double sum_ = 0.0;
    double error_ = 0.0;
};

}  // namespace inversive::detail
