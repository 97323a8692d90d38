#include "cauchykit/series.hpp"

#include <algorithm>

#include "cauchykit/errors.hpp"

namespace cauchykit {

SeriesTrunc series_add(const SeriesTrunc& f, const SeriesTrunc& g) {
    int k = std::min(f.order(), g.order());
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c[i] = f.at(i) + g.at(i);
    return SeriesTrunc(std::move(c));
}

SeriesTrunc series_sub(const SeriesTrunc& f, const SeriesTrunc& g) {
    int k = std::min(f.order(), g.order());
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c[i] = f.at(i) - g.at(i);
    return SeriesTrunc(std::move(c));
}

SeriesTrunc series_neg(const SeriesTrunc& f) {
    std::vector<Rational> c(f.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -f.coeffs[i];
    return SeriesTrunc(std::move(c));
}

SeriesTrunc series_scale(const Rational& s, const SeriesTrunc& f) {
    std::vector<Rational> c(f.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * f.coeffs[i];
    return SeriesTrunc(std::move(c));
}

SeriesTrunc series_mul(const SeriesTrunc& f, const SeriesTrunc& g) {
    int k = std::min(f.order(), g.order());
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k - i; ++j)
            c[static_cast<std::size_t>(i + j)] += f.at(i) * g.at(j);
    return SeriesTrunc(std::move(c));
}

SeriesTrunc series_reciprocal(const SeriesTrunc& f) {
    if (f.at(0).is_zero()) throw ZeroConstantTerm();
    int k = f.order();
    std::vector<Rational> h(static_cast<std::size_t>(k) + 1);
    h[0] = Rational(1) / f.at(0);
    for (int m = 1; m <= k; ++m) {
        Rational s(0);
        for (int j = 1; j <= m; ++j) s += f.at(j) * h[static_cast<std::size_t>(m - j)];
        h[static_cast<std::size_t>(m)] = -s / f.at(0);
    }
    return SeriesTrunc(std::move(h));
}

SeriesTrunc series_pow(const SeriesTrunc& f, unsigned long e) {
    SeriesTrunc acc = SeriesTrunc::constant(Rational(1), f.order());
    SeriesTrunc base = f;
    while (e > 0) {
        if (e & 1UL) acc = series_mul(acc, base);
        e >>= 1UL;
        if (e > 0) base = series_mul(base, base);
    }
    return acc;
}

} // namespace cauchykit
