#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cauchykit/partition.hpp"
#include "cauchykit/rational.hpp"
#include "cauchykit/series.hpp"

namespace cauchykit {

enum class Parity { Even, Odd, None };

std::string to_string(Parity p);

enum class Catalog { Geometric, GeomSq, GeomSqNeg, Exp, Sinh, Sin, Log1m };

/// Radius of convergence: a finite rational or +infinity. `exact` is false
/// when only a lower bound is known; analytic evaluation never relies on an
/// inexact radius.
struct Radius {
    bool finite = false;
    bool exact = true;
    Rational value;

    static Radius infinite() { return {false, true, Rational(0)}; }
    static Radius exact_of(Rational v) { return {true, true, std::move(v)}; }
    static Radius lower_bound(Rational v) { return {true, false, std::move(v)}; }
    static Radius lower_bound_infinite() { return {false, false, Rational(0)}; }

    /// True when |z| is strictly inside the radius. Only meaningful for exact radii.
    bool contains(const Rational& z) const { return !finite || z.abs() < value; }

    std::string str() const;
};

namespace ast {
struct Node;
using NodePtr = std::shared_ptr<const Node>;
}

/// A generating function g with exact Maclaurin coefficient access. Built from
/// the catalog, from parsed expression text, or from a coefficient vector.
/// Immutable and cheap to copy; coefficient access is safe under concurrent readers.
class GenFun {
public:
    static GenFun catalog(Catalog id);
    static GenFun parse(std::string_view text);
    static GenFun polynomial(std::vector<Rational> coeffs);

    /// k-th Maclaurin coefficient g^(k)(0)/k!, exact for any k >= 0.
    Rational coeff(int k) const;

    /// g^(k)(0) = k! * coeff(k).
    Rational deriv0(int k) const;

    /// Coefficients 0..order as a truncated series.
    SeriesTrunc series(int order) const;

    Radius radius() const;

    /// Structural parity; None when nothing is claimed.
    Parity parity() const;

    /// Parity read off the coefficients 0..order (for reporting on parsed input).
    Parity parity_detected(int order) const;

    bool analytic_evaluable() const;

    /// Rational q with |q - g(z)| <= eps. Closed forms short-circuit where the
    /// catalog entry has one; otherwise Taylor partial sums with a proven tail
    /// bound. Throws OutsideRadius / UnsupportedAnalyticEval.
    Rational eval_analytic(const Rational& z, const Rational& eps) const;

    const std::string& source() const;

private:
    struct Impl;
    explicit GenFun(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

inline GenFun parse_genfun(std::string_view text) { return GenFun::parse(text); }

/// G_lambda: product of g^(k_l)(0) over the staircase exponents of lambda.
Rational g_lambda(const GenFun& g, const Partition& lambda, int n);

} // namespace cauchykit
