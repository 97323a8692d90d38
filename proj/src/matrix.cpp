#include "cauchykit/matrix.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace cauchykit {

namespace {

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    assert(r == 0 && "Bareiss division must be exact");
    return q;
}

template <class F>
double lu_det(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    std::vector<F> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<F>(m[i][j]);
    }

    F det = F(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k])) piv = r;
        if (a[piv * n + k] == F(0)) return 0.0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            det = -det;
        }
        det *= a[k * n + k];
        for (std::size_t r = k + 1; r < n; ++r) {
            F f = a[r * n + k] / a[k * n + k];
            for (std::size_t j = k; j < n; ++j) a[r * n + j] -= f * a[k * n + j];
        }
    }
    return static_cast<double>(det);
}

} // namespace

Rational det_exact(const MatrixQ& m) {
    const int n = m.n();

    // Integer matrix b with b[i][j] = m[i][j] * rowscale[i].
    std::vector<mpz_class> b(static_cast<std::size_t>(n) * n);
    mpz_class scale_all = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class rowscale = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(rowscale.get_mpz_t(), rowscale.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i) * n + j] = m.at(i, j).num() * (rowscale / m.at(i, j).den());
        scale_all *= rowscale;
    }
    auto e = [&](int i, int j) -> mpz_class& { return b[static_cast<std::size_t>(i) * n + j]; };

    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int r = k + 1;
            while (r < n && e(r, k) == 0) ++r;
            if (r == n) return Rational(0);
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                e(i, j) = exact_div(e(i, j) * e(k, k) - e(i, k) * e(k, j), prev);
            e(i, k) = 0;
        }
        prev = e(k, k);
    }

    mpz_class d = e(n - 1, n - 1);
    if (sign < 0) d = -d;
    return Rational(mpq_class(d, scale_all));
}

double det_float(const std::vector<std::vector<double>>& m, FloatPrecision precision_hint) {
    if (m.empty()) throw std::invalid_argument("matrix dimension must be >= 1");
    return precision_hint == FloatPrecision::Extended ? lu_det<long double>(m) : lu_det<double>(m);
}

} // namespace cauchykit
