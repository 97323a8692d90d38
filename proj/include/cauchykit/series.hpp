#pragma once

#include <vector>

#include "cauchykit/rational.hpp"

namespace cauchykit {

/// Truncated Maclaurin series: coeffs[k] = g^(k)(0)/k! for k = 0..order().
/// Coefficients are exact up to the truncation order, nothing is claimed beyond it.
struct SeriesTrunc {
    std::vector<Rational> coeffs;

    SeriesTrunc() : coeffs(1) {}
    explicit SeriesTrunc(std::vector<Rational> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs.resize(1);
    }
    static SeriesTrunc constant(const Rational& c, int order) {
        SeriesTrunc s;
        s.coeffs.assign(static_cast<std::size_t>(order) + 1, Rational(0));
        s.coeffs[0] = c;
        return s;
    }
    static SeriesTrunc variable(int order) {
        SeriesTrunc s = constant(Rational(0), order);
        if (order >= 1) s.coeffs[1] = Rational(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const Rational& at(int k) const { return coeffs[static_cast<std::size_t>(k)]; }
};

SeriesTrunc series_add(const SeriesTrunc& f, const SeriesTrunc& g);
SeriesTrunc series_sub(const SeriesTrunc& f, const SeriesTrunc& g);
SeriesTrunc series_neg(const SeriesTrunc& f);
SeriesTrunc series_scale(const Rational& c, const SeriesTrunc& f);

/// Cauchy product, truncated to min(order(f), order(g)).
SeriesTrunc series_mul(const SeriesTrunc& f, const SeriesTrunc& g);

/// h with f*h = 1 up to the truncation order. Throws ZeroConstantTerm if c_0 = 0.
SeriesTrunc series_reciprocal(const SeriesTrunc& f);

/// f^e truncated to order(f). e >= 0.
SeriesTrunc series_pow(const SeriesTrunc& f, unsigned long e);

} // namespace cauchykit
