#pragma once

#include <cstddef>
#include <vector>

#include "cauchykit/rational.hpp"

namespace cauchykit {

/// Square matrix of exact rationals, row-major.
class MatrixQ {
public:
    explicit MatrixQ(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    }

    int n() const { return n_; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<Rational> e_;
};

/// Exact determinant. Clears each row to integers by its denominator lcm,
/// runs fraction-free Bareiss elimination, and rescales at the end.
Rational det_exact(const MatrixQ& m);

enum class FloatPrecision { Double, Extended };

/// Partially pivoted LU determinant in floating point. Exact mode is the
/// source of truth; this is only contracted to track it within tolerance
/// for well-conditioned input.
double det_float(const std::vector<std::vector<double>>& m,
                 FloatPrecision precision_hint = FloatPrecision::Extended);

} // namespace cauchykit
