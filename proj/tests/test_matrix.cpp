#include <doctest.h>

#include <cmath>
#include <random>

#include "cauchykit/matrix.hpp"
#include "test_support.hpp"

using cauchykit::MatrixQ;
using cauchykit::Rational;

namespace {

// Cofactor expansion along the first row; independent of the Bareiss kernel.
Rational cofactor_det(const MatrixQ& m) {
    const int n = m.n();
    if (n == 1) return m.at(0, 0);
    Rational acc(0);
    for (int j = 0; j < n; ++j) {
        MatrixQ minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rational term = m.at(0, j) * cofactor_det(minor);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

MatrixQ random_matrix(std::mt19937_64& rng, int n) {
    MatrixQ m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = testsupport::random_rational(rng);
    return m;
}

MatrixQ mat_mul(const MatrixQ& a, const MatrixQ& b) {
    MatrixQ c(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            Rational s(0);
            for (int k = 0; k < a.n(); ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

} // namespace

TEST_CASE("det_exact basics") {
    MatrixQ id3(3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = Rational(1);
    CHECK(det_exact(id3) == Rational(1));

    MatrixQ m(2);
    m.at(0, 0) = Rational(1); m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(3); m.at(1, 1) = Rational(4);
    CHECK(det_exact(m) == Rational(-2));

    MatrixQ sing(2);
    sing.at(0, 0) = Rational(1); sing.at(0, 1) = Rational(2);
    sing.at(1, 0) = Rational(2); sing.at(1, 1) = Rational(4);
    CHECK(det_exact(sing) == Rational(0));
}

TEST_CASE("det_exact handles a zero pivot") {
    MatrixQ m(3);
    m.at(0, 0) = Rational(0); m.at(0, 1) = Rational(1); m.at(0, 2) = Rational(2);
    m.at(1, 0) = Rational(1); m.at(1, 1) = Rational(0); m.at(1, 2) = Rational(3);
    m.at(2, 0) = Rational(4); m.at(2, 1) = Rational(5); m.at(2, 2) = Rational(0);
    CHECK(det_exact(m) == cofactor_det(m));
}

TEST_CASE("det_exact agrees with cofactor expansion on random 4x4") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 40; ++rep) {
        MatrixQ m = random_matrix(rng, 4);
        CHECK(det_exact(m) == cofactor_det(m));
    }
}

TEST_CASE("det_exact is multiplicative") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 20; ++rep) {
        MatrixQ a = random_matrix(rng, 3);
        MatrixQ b = random_matrix(rng, 3);
        CHECK(det_exact(mat_mul(a, b)) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("cauchy matrix determinant equals the product form") {
    // a = (1/2, 1/3), x = (1/3, 1/5); entries 1/(1 - a_j x_i)
    std::vector<Rational> a{Rational(1, 2), Rational(1, 3)};
    std::vector<Rational> x{Rational(1, 3), Rational(1, 5)};
    MatrixQ m(2);
    Rational prod(1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.at(i, j) = Rational(1) / (Rational(1) - a[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(i)]);
            prod *= m.at(i, j);
        }
    Rational vx = x[0] - x[1];
    Rational va = a[0] - a[1];
    CHECK(det_exact(m) == vx * va * prod);
}

TEST_CASE("det_float basics and agreement with det_exact") {
    CHECK(cauchykit::det_float({{1, 0}, {0, 1}}) == doctest::Approx(1.0));
    CHECK(cauchykit::det_float({{2, 0}, {0, 3}}) == doctest::Approx(6.0));
    CHECK(cauchykit::det_float({{1, 2}, {2, 4}}) == doctest::Approx(0.0));

    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        MatrixQ m = random_matrix(rng, 4);
        Rational exact = det_exact(m);
        if (exact.is_zero()) continue;
        std::vector<std::vector<double>> f(4, std::vector<double>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).to_double();
        double rel = std::fabs(cauchykit::det_float(f) - exact.to_double()) / std::fabs(exact.to_double());
        CHECK(rel < 1e-12);
        double rel2 = std::fabs(cauchykit::det_float(f, cauchykit::FloatPrecision::Double) - exact.to_double()) /
                      std::fabs(exact.to_double());
        CHECK(rel2 < 1e-9);
    }
}
