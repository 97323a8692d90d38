#include <doctest.h>

#include <map>
#include <random>

#include "cauchykit/errors.hpp"
#include "cauchykit/identity.hpp"
#include "test_support.hpp"

using namespace cauchykit;

namespace {

const Catalog kAllCatalog[] = {Catalog::Geometric, Catalog::GeomSq, Catalog::GeomSqNeg,
                               Catalog::Exp,       Catalog::Sinh,   Catalog::Sin,
                               Catalog::Log1m};

EvalConfig exact_cfg(PointVector a, PointVector x, int order) {
    return EvalConfig::exact_truncated(std::move(a), std::move(x), order);
}

} // namespace

TEST_CASE("collocation matrix entries") {
    GenFun e = GenFun::catalog(Catalog::Exp);
    MatrixQ m1 = collocation_matrix_truncated(e, exact_cfg({Rational(1)}, {Rational(0)}, 5), 5);
    CHECK(m1.at(0, 0) == Rational(1));

    GenFun lin = GenFun::parse("1+x");
    MatrixQ m2 = collocation_matrix_truncated(
        lin, exact_cfg({Rational(1), Rational(2)}, {Rational(1), Rational(3)}, 1), 1);
    CHECK(m2.at(0, 0) == Rational(2));
    CHECK(m2.at(0, 1) == Rational(3));
    CHECK(m2.at(1, 0) == Rational(4));
    CHECK(m2.at(1, 1) == Rational(7));

    GenFun geom = GenFun::catalog(Catalog::Geometric);
    MatrixQ m3 = collocation_matrix_truncated(geom, exact_cfg({Rational(1)}, {Rational(1, 2)}, 4), 4);
    CHECK(m3.at(0, 0) == Rational(31, 16));
}

TEST_CASE("rhs_truncated at n=1, a=(1) is the Taylor partial sum") {
    std::mt19937_64 rng(301);
    for (Catalog id : kAllCatalog) {
        GenFun g = GenFun::catalog(id);
        Rational x1 = testsupport::random_rational(rng, 9, 9);
        EvalConfig cfg = exact_cfg({Rational(1)}, {x1}, 0);
        for (int m = 0; m <= 8; ++m) {
            Rational partial(0);
            for (int k = 0; k <= m; ++k) partial += g.coeff(k) * x1.pow(static_cast<unsigned long>(k));
            CHECK(rhs_truncated(g, cfg, m) == partial);
        }
    }
}

TEST_CASE("rhs_truncated vanishes when the truncated columns are dependent") {
    GenFun lin = GenFun::parse("1+x");
    EvalConfig cfg = exact_cfg({Rational(1), Rational(2), Rational(3)},
                               {Rational(1), Rational(2), Rational(4)}, 1);
    CHECK(rhs_truncated(lin, cfg, 1) == Rational(0));
    CHECK(lhs_partial(lin, cfg, 1) == Rational(0)); // empty index set
}

TEST_CASE("lhs_partial examples") {
    GenFun geom = GenFun::catalog(Catalog::Geometric);
    EvalConfig cfg1 = exact_cfg({Rational(1)}, {Rational(1, 2)}, 4);
    CHECK(lhs_partial(geom, cfg1, 4) == Rational(31, 16));

    GenFun e = GenFun::catalog(Catalog::Exp);
    EvalConfig cfg3 = exact_cfg({Rational(1), Rational(2), Rational(3)},
                                {Rational(1), Rational(5), Rational(7)}, 2);
    CHECK(lhs_partial(e, cfg3, 2) == Rational(1, 2)); // only the empty partition, 1/(2! 1! 0!)
    CHECK(lhs_partial(e, cfg3, 1) == Rational(0));    // k_cap < n-1
}

TEST_CASE("verify_truncated on the worked configurations") {
    GenFun geom = GenFun::catalog(Catalog::Geometric);
    EvalConfig cfg = exact_cfg({Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(1, 7)}, 10);
    IdentityReport rep = verify_truncated(geom, cfg, 10);
    CHECK(rep.verdict == Verdict::ExactMatch);
    CHECK(rep.partition_count == 55); // binomial(11, 2)
    CHECK(rep.residual_exact->is_zero());

    GenFun ones = GenFun::parse("1+x+x^2");
    IdentityReport rep2 = verify_truncated(ones, exact_cfg({Rational(2), Rational(3)},
                                                           {Rational(1), Rational(4)}, 2), 2);
    CHECK(rep2.verdict == Verdict::ExactMatch);
}

TEST_CASE("sinh verification gets all its mass from odd-class partitions") {
    GenFun g = GenFun::catalog(Catalog::Sinh);
    EvalConfig cfg = exact_cfg({Rational(1, 2), Rational(2, 3)}, {Rational(1, 4), Rational(3, 5)}, 9);
    IdentityReport rep = verify_truncated(g, cfg, 9, /*log_terms=*/true);
    CHECK(rep.verdict == Verdict::ExactMatch);
    bool saw_nonzero = false;
    for (const TermLog& t : rep.terms) {
        if (parity_class(t.lambda, 2) != ParityClass::Odd) {
            CHECK(t.g == Rational(0));
            CHECK(t.term == Rational(0));
        } else {
            CHECK(t.g != Rational(0));
            saw_nonzero = true;
        }
    }
    CHECK(saw_nonzero);
}

TEST_CASE("truncation coherence: lhs equals rhs for every catalog g, n, m") {
    std::mt19937_64 rng(307);
    for (Catalog id : kAllCatalog) {
        GenFun g = GenFun::catalog(id);
        for (int n = 1; n <= 3; ++n) {
            PointVector a = testsupport::random_distinct_points(rng, n, 7, 7);
            PointVector x = testsupport::random_distinct_points(rng, n, 7, 7);
            EvalConfig cfg = exact_cfg(a, x, 0);
            for (int m = n - 1; m <= 12; ++m) {
                CHECK(lhs_partial(g, cfg, m) == rhs_truncated(g, cfg, m));
            }
        }
    }
}

TEST_CASE("telescoping: level differences match the term logs") {
    GenFun g = GenFun::catalog(Catalog::Geometric);
    EvalConfig cfg = exact_cfg({Rational(1, 2), Rational(-1, 3)}, {Rational(2, 5), Rational(1, 7)}, 0);
    const int n = 2;
    std::vector<TermLog> terms;
    lhs_partial(g, cfg, 9, &terms);
    std::map<int, Rational> level_sums;
    for (const TermLog& t : terms) {
        int level = t.expo[0]; // largest staircase exponent
        auto [it, inserted] = level_sums.try_emplace(level, Rational(0));
        it->second += t.term;
    }
    for (int k = n - 1; k < 9; ++k) {
        Rational diff = lhs_partial(g, cfg, k + 1) - lhs_partial(g, cfg, k);
        Rational want = level_sums.count(k + 1) ? level_sums[k + 1] : Rational(0);
        CHECK(diff == want);
    }
}

TEST_CASE("parallel term evaluation returns the identical result") {
    GenFun g = GenFun::catalog(Catalog::Sin);
    EvalConfig cfg = exact_cfg({Rational(1, 2), Rational(1, 3), Rational(1, 5)},
                               {Rational(1, 7), Rational(2, 7), Rational(3, 7)}, 0);
    std::vector<TermLog> seq_log, par_log;
    Rational seq = lhs_partial(g, cfg, 10, &seq_log, 1);
    Rational par = lhs_partial(g, cfg, 10, &par_log, 4);
    CHECK(seq == par);
    REQUIRE(seq_log.size() == par_log.size());
    for (std::size_t i = 0; i < seq_log.size(); ++i) {
        CHECK(seq_log[i].lambda == par_log[i].lambda);
        CHECK(seq_log[i].term == par_log[i].term);
    }
}

TEST_CASE("cauchy_product_check") {
    auto [d1, p1] = cauchy_product_check({Rational(1, 2)}, {Rational(1, 2)});
    CHECK(d1 == Rational(4, 3));
    CHECK(p1 == Rational(4, 3));

    auto [d2, p2] = cauchy_product_check({Rational(1, 2), Rational(1, 3)},
                                         {Rational(1, 5), Rational(1, 7)});
    CHECK(d2 == p2);

    // a containing 0: one column is constant 1, identity still exact
    auto [d3, p3] = cauchy_product_check({Rational(0), Rational(1, 3)},
                                         {Rational(1, 5), Rational(1, 7)});
    CHECK(d3 == p3);

    CHECK_THROWS_AS(cauchy_product_check({Rational(2)}, {Rational(1, 2)}), SingularEntry);
    CHECK_THROWS_AS(cauchy_product_check({Rational(1), Rational(1)}, {Rational(2), Rational(3)}),
                    RepeatedPoints);
}

TEST_CASE("cauchy_product_check at random configurations") {
    std::mt19937_64 rng(311);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            PointVector a = testsupport::random_distinct_points(rng, n, 9, 11);
            PointVector x = testsupport::random_distinct_points(rng, n, 9, 11);
            bool singular = false;
            for (const Rational& ai : a)
                for (const Rational& xi : x)
                    if (ai * xi == Rational(1)) singular = true;
            if (singular) continue;
            auto [d, p] = cauchy_product_check(a, x);
            CHECK(d == p);
        }
    }
}

TEST_CASE("vandermonde_square_check") {
    auto [l1, r1] = vandermonde_square_check({Rational(1), Rational(2)});
    CHECK(l1 == Rational(-3));
    CHECK(r1 == Rational(-3));

    auto [l2, r2] = vandermonde_square_check({Rational(1), Rational(-1)});
    CHECK(l2 == Rational(0));
    CHECK(r2 == Rational(0));

    auto [l3, r3] = vandermonde_square_check({Rational(7, 3)});
    CHECK(l3 == Rational(1));
    CHECK(r3 == Rational(1));

    CHECK_THROWS_AS(vandermonde_square_check({Rational(1), Rational(1)}), RepeatedPoints);
}

TEST_CASE("single_schur_check") {
    // staircase mu gives the empty partition, both sides 1
    EvalConfig cfg2 = exact_cfg({Rational(2), Rational(5)}, {Rational(1, 3), Rational(4)}, 0);
    IdentityReport rep = single_schur_check({1, 0}, cfg2);
    CHECK(rep.verdict == Verdict::ExactMatch);
    CHECK(*rep.lhs_exact == Rational(1));

    IdentityReport rep2 = single_schur_check({3, 0}, exact_cfg({Rational(1), Rational(2)},
                                                               {Rational(1), Rational(3)}, 0));
    CHECK(rep2.verdict == Verdict::ExactMatch);

    IdentityReport rep3 = single_schur_check(
        {5, 2, 1}, exact_cfg({Rational(1, 2), Rational(2), Rational(-3)},
                             {Rational(1, 5), Rational(1), Rational(4)}, 0));
    CHECK(rep3.verdict == Verdict::ExactMatch);

    CHECK_THROWS_AS(single_schur_check({2, 2}, cfg2), NotStrictlyDecreasing);
    CHECK_THROWS_AS(single_schur_check({-1, -2}, cfg2), NotStrictlyDecreasing);
    CHECK_THROWS_AS(single_schur_check({3, 1, 0}, cfg2), InvalidConfig);
}

TEST_CASE("audit: exp matches everywhere") {
    for (int n = 1; n <= 3; ++n) {
        auto recs = audit_example(AuditExample::Exp, n, enumerate_max_weight(n, 6));
        for (const AuditRecord& r : recs) {
            CHECK(r.match);
            CHECK(r.claimed == Rational(1));
        }
    }
}

TEST_CASE("audit: geomsq and sinh match everywhere") {
    for (AuditExample id : {AuditExample::GeomSq, AuditExample::Sinh}) {
        for (int n = 1; n <= 3; ++n) {
            auto recs = audit_example(id, n, enumerate_max_weight(n, 6));
            for (const AuditRecord& r : recs) CHECK(r.match);
        }
    }
}

TEST_CASE("audit: sin mismatches at odd n, matches at even n") {
    auto recs1 = audit_example(AuditExample::Sin, 1, {Partition{1}});
    REQUIRE(recs1.size() == 1);
    CHECK(recs1[0].computed == Rational(1));  // sin'(0)
    CHECK(recs1[0].claimed == Rational(-1));  // printed closed form
    CHECK(!recs1[0].match);

    for (const AuditRecord& r : audit_example(AuditExample::Sin, 2, enumerate_max_weight(2, 6)))
        CHECK(r.match);
}

TEST_CASE("audit: geomsqneg sign flips at n = 2, 3 (mod 4)") {
    for (const AuditRecord& r : audit_example(AuditExample::GeomSqNeg, 1, enumerate_max_weight(1, 6)))
        CHECK(r.match);
    int even_class_records = 0;
    for (const AuditRecord& r : audit_example(AuditExample::GeomSqNeg, 2, enumerate_max_weight(2, 6))) {
        if (parity_class(r.lambda, 2) == ParityClass::Even) {
            CHECK(!r.match);
            CHECK(r.computed == -r.claimed);
            ++even_class_records;
        } else {
            CHECK(r.match); // both sides zero
        }
    }
    CHECK(even_class_records > 0);
}

TEST_CASE("audit: log closed form ignores signs and vanishing") {
    auto recs = audit_example(AuditExample::Log, 2, enumerate_max_weight(2, 4));
    for (const AuditRecord& r : recs) {
        if (r.lambda.length() < 2) {
            CHECK(r.computed == Rational(0)); // staircase hits exponent 0, g(0) = 0 kills the term
            CHECK(r.claimed != Rational(0));
            CHECK(!r.match);
        }
    }
    // magnitude matches only at n = 1, sign never does
    for (const AuditRecord& r : audit_example(AuditExample::Log, 1, enumerate_max_weight(1, 5))) {
        if (r.lambda.length() == 1) {
            CHECK(r.computed == -r.claimed);
            CHECK(!r.match);
        }
    }
}

TEST_CASE("symmetry_check") {
    std::mt19937_64 rng(313);
    PointVector a = testsupport::random_distinct_points(rng, 3, 8, 8);
    PointVector x = testsupport::random_distinct_points(rng, 3, 8, 8);
    EvalConfig cfg = exact_cfg(a, x, 6);
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}, {2, 1, 0}};
    CHECK(symmetry_check(GenFun::catalog(Catalog::Exp), cfg, perms));
    CHECK(symmetry_check(GenFun::catalog(Catalog::Geometric), cfg, perms));
}

TEST_CASE("verify_analytic: exp converges inside the budget") {
    EvalConfig cfg = EvalConfig::analytic({Rational(1), Rational(2)},
                                          {Rational(1, 2), Rational(1, 3)}, 1e-10, 40);
    IdentityReport rep = verify_analytic(GenFun::catalog(Catalog::Exp), cfg);
    CHECK(rep.verdict == Verdict::WithinTolerance);
    CHECK(rep.order <= 40);
    CHECK(*rep.residual_value <= 1e-10);
    CHECK(!rep.trace.empty());
}

TEST_CASE("verify_analytic: geometric rhs equals the product form") {
    PointVector a{Rational(1, 2), Rational(1, 3)};
    PointVector x{Rational(1, 5), Rational(1, 7)};
    EvalConfig cfg = EvalConfig::analytic(a, x, 1e-10, 60);
    IdentityReport rep = verify_analytic(GenFun::catalog(Catalog::Geometric), cfg);
    CHECK(rep.verdict == Verdict::WithinTolerance);
    Rational prod(1);
    for (const Rational& ai : a)
        for (const Rational& xi : x) prod *= Rational(1) / (Rational(1) - ai * xi);
    CHECK(std::fabs(*rep.rhs_value - prod.to_double()) < 1e-10);
}

TEST_CASE("verify_analytic with a containing 0: radius condition is vacuous at a_max = 0") {
    EvalConfig cfg = EvalConfig::analytic({Rational(0)}, {Rational(5)}, 1e-10, 10);
    IdentityReport rep = verify_analytic(GenFun::catalog(Catalog::Geometric), cfg);
    CHECK(rep.verdict == Verdict::WithinTolerance); // every entry is g(0)

    EvalConfig cfg2 = EvalConfig::analytic({Rational(0), Rational(1, 3)},
                                           {Rational(1, 5), Rational(1, 7)}, 1e-10, 40);
    CHECK(verify_analytic(GenFun::catalog(Catalog::Geometric), cfg2).verdict ==
          Verdict::WithinTolerance);
}

TEST_CASE("polynomial g has G_lambda = C_lambda * B_lambda while the staircase fits") {
    std::mt19937_64 rng(317);
    const int m = 6;
    std::vector<Rational> b;
    for (int i = 0; i <= m; ++i) b.push_back(testsupport::random_rational(rng));
    GenFun g = GenFun::polynomial(b);
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& lam : enumerate_max_weight(n, 9)) {
            if (lam.part(0) + n - 1 <= m) {
                CHECK(g_lambda(g, lam, n) == c_lambda(lam, n) * b_lambda(b, lam, n));
            } else {
                CHECK(g_lambda(g, lam, n) == Rational(0));
                CHECK_THROWS_AS(b_lambda(b, lam, n), IndexOutOfRange);
            }
        }
    }
}

TEST_CASE("verify_analytic rejects points outside the radius") {
    EvalConfig cfg = EvalConfig::analytic({Rational(1), Rational(2)},
                                          {Rational(1, 2), Rational(2, 3)}, 1e-8, 20);
    CHECK_THROWS_AS(verify_analytic(GenFun::catalog(Catalog::Geometric), cfg), OutsideRadius);
    CHECK_THROWS_AS(verify_analytic(GenFun::parse("sin(x)/(1-x^2)"),
                                    EvalConfig::analytic({Rational(1)}, {Rational(1, 2)}, 1e-8, 20)),
                    UnsupportedAnalyticEval);
}

TEST_CASE("analytic product form for 1/(1-x^2)") {
    PointVector a{Rational(1, 2), Rational(1, 3)};
    PointVector x{Rational(1, 5), Rational(1, 7)};
    EvalConfig cfg = EvalConfig::analytic(a, x, 1e-11, 60);
    IdentityReport rep = verify_analytic(GenFun::catalog(Catalog::GeomSq), cfg);
    CHECK(rep.verdict == Verdict::WithinTolerance);
    Rational prod(1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = i + 1; j < 2; ++j) prod *= (a[i] + a[j]) * (x[i] + x[j]);
    for (const Rational& ai : a)
        for (const Rational& xj : x) prod *= Rational(1) / (Rational(1) - ai * ai * xj * xj);
    CHECK(std::fabs(*rep.rhs_value - prod.to_double()) < 1e-9);
}

TEST_CASE("sign exponents are integers on their parity class") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& lam : testsupport::all_partitions_up_to(12)) {
            if (lam.length() > n) continue;
            long w = lam.weight(), nn = n;
            if (parity_class(lam, n) == ParityClass::Even) CHECK((2 * w - nn * (nn - 1)) % 4 == 0);
            if (parity_class(lam, n) == ParityClass::Odd) CHECK((2 * w + nn * (nn + 1)) % 4 == 0);
        }
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(EvalConfig::exact_truncated({Rational(1), Rational(1)},
                                                {Rational(2), Rational(3)}, 4),
                    RepeatedPoints);
    CHECK_THROWS_AS(EvalConfig::exact_truncated({Rational(1)}, {Rational(2), Rational(3)}, 4),
                    InvalidConfig);
    CHECK_THROWS_AS(EvalConfig::analytic({Rational(1)}, {Rational(2)}, -1.0, 10), InvalidConfig);
}
