#include <doctest.h>

#include <algorithm>
#include <set>

#include "cauchykit/errors.hpp"
#include "cauchykit/partition.hpp"
#include "test_support.hpp"

using namespace cauchykit;

TEST_CASE("construction strips trailing zeros and validates") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({}).length() == 0);
    CHECK(Partition({0, 0}).length() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("text form") {
    CHECK(Partition({3, 1}).str() == "[3,1]");
    CHECK(Partition({}).str() == "[]");
    CHECK(Partition::parse("[3,1]") == Partition({3, 1}));
    CHECK(Partition::parse("[]") == Partition({}));
    CHECK(Partition::parse(" [ 2 , 2 , 1 ] ") == Partition({2, 2, 1}));
    CHECK_THROWS_AS(Partition::parse("[1,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,1"), std::invalid_argument);
}

TEST_CASE("staircase") {
    CHECK(staircase(Partition({3, 1}), 2) == std::vector<int>{4, 1});
    CHECK(staircase(Partition({}), 3) == std::vector<int>{2, 1, 0});
    CHECK(staircase(Partition({2, 2, 1}), 3) == std::vector<int>{4, 3, 1});
    CHECK_THROWS_AS(staircase(Partition({1, 1, 1}), 2), LengthExceedsN);
}

TEST_CASE("staircase is strictly decreasing and invertible") {
    for (const Partition& lam : enumerate(3, 9)) {
        std::vector<int> k = staircase(lam, 3);
        for (std::size_t i = 1; i < k.size(); ++i) CHECK(k[i - 1] > k[i]);
        std::vector<int> back;
        for (int l = 0; l < 3; ++l) back.push_back(k[static_cast<std::size_t>(l)] - 3 + 1 + l);
        CHECK(Partition(back) == lam);
    }
}

TEST_CASE("enumerate produces exactly the staircase-bounded set") {
    auto got1 = enumerate(1, 3);
    CHECK(got1 == std::vector<Partition>{Partition({}), Partition({1}), Partition({2}), Partition({3})});

    // brute-force filter oracle
    for (int n = 1; n <= 3; ++n) {
        for (int k_cap = 0; k_cap <= 7; ++k_cap) {
            std::set<std::string> expect;
            for (const Partition& lam : testsupport::all_partitions_up_to(static_cast<long>(k_cap + 1) * n)) {
                if (lam.length() > n) continue;
                if (lam.part(0) + n - 1 > k_cap) continue;
                expect.insert(lam.str());
            }
            auto got = enumerate(n, k_cap);
            std::set<std::string> got_set;
            for (const Partition& lam : got) got_set.insert(lam.str());
            CHECK(got.size() == got_set.size()); // no duplicates
            CHECK(got_set == expect);
            if (k_cap >= n - 1)
                CHECK(Rational(static_cast<long>(got.size())) == binomial(static_cast<unsigned long>(k_cap) + 1, static_cast<unsigned long>(n)));
        }
    }

    CHECK(enumerate(2, 2) == std::vector<Partition>{Partition({}), Partition({1}), Partition({1, 1})});
    CHECK(enumerate(2, 1) == std::vector<Partition>{Partition({})});
    CHECK(enumerate(3, 1).empty());
}

TEST_CASE("enumeration order is weight-ascending then descending lex") {
    auto lams = enumerate(3, 12);
    for (std::size_t i = 1; i < lams.size(); ++i) {
        long w0 = lams[i - 1].weight(), w1 = lams[i].weight();
        CHECK(w0 <= w1);
        if (w0 == w1) CHECK(lams[i - 1].parts() > lams[i].parts());
    }
}

TEST_CASE("staircase images are exactly the strictly decreasing tuples") {
    const int n = 3, k_cap = 6;
    std::set<std::vector<int>> images;
    for (const Partition& lam : enumerate(n, k_cap)) images.insert(staircase(lam, n));
    std::set<std::vector<int>> expect;
    for (int k1 = 0; k1 <= k_cap; ++k1)
        for (int k2 = 0; k2 < k1; ++k2)
            for (int k3 = 0; k3 < k2; ++k3) expect.insert({k1, k2, k3});
    CHECK(images == expect);
}

TEST_CASE("c_lambda") {
    CHECK(c_lambda(Partition({5}), 1) == Rational(120)); // m!
    CHECK(c_lambda(Partition({}), 3) == Rational(2));    // 2! 1! 0!
    CHECK(c_lambda(Partition({2, 1}), 2) == Rational(6)); // 3! 1!
    CHECK_THROWS_AS(c_lambda(Partition({1, 1, 1}), 2), LengthExceedsN);
}

TEST_CASE("p_lambda") {
    CHECK(p_lambda(Partition({3, 2})) == Rational(6));
    CHECK(p_lambda(Partition({})) == Rational(1));
    CHECK(p_lambda(Partition({4, 1, 1})) == Rational(4));
}

TEST_CASE("b_lambda") {
    std::vector<Rational> ones(7, Rational(1));
    for (const Partition& lam : enumerate(3, 6)) CHECK(b_lambda(ones, lam, 3) == Rational(1));

    std::vector<Rational> b{Rational(2), Rational(3), Rational(5)};
    CHECK(b_lambda(b, Partition({2}), 1) == Rational(5));
    std::vector<Rational> bz{Rational(1), Rational(0), Rational(3)};
    CHECK(b_lambda(bz, Partition({1, 1}), 2) == Rational(0)); // b_2 * b_1 = 0
    CHECK_THROWS_AS(b_lambda(b, Partition({3}), 1), IndexOutOfRange);
}

TEST_CASE("parity_class") {
    CHECK(parity_class(Partition({1}), 2) == ParityClass::Even);  // staircase (2,0)
    CHECK(parity_class(Partition({1, 1}), 2) == ParityClass::Mixed); // (2,1)
    CHECK(parity_class(Partition({3}), 1) == ParityClass::Odd);
    CHECK_THROWS_AS(parity_class(Partition({1, 1}), 1), LengthExceedsN);
}

TEST_CASE("parity_class matches the direct definition for |lambda| <= 10") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& lam : testsupport::all_partitions_up_to(10)) {
            if (lam.length() > n) continue;
            bool all_even = true, all_odd = true;
            for (int l = 1; l <= n; ++l) {
                int k = lam.part(l - 1) + n - l;
                (k % 2 == 0 ? all_odd : all_even) = false;
            }
            ParityClass want = all_even ? ParityClass::Even
                                        : (all_odd ? ParityClass::Odd : ParityClass::Mixed);
            CHECK(parity_class(lam, n) == want);
        }
    }
}

TEST_CASE("enumerate_max_weight") {
    auto lams = enumerate_max_weight(2, 3);
    std::set<std::string> got;
    for (const Partition& lam : lams) got.insert(lam.str());
    CHECK(got == std::set<std::string>{"[]", "[1]", "[1,1]", "[2]", "[2,1]", "[3]"});
}
