#include "cauchykit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cauchykit/errors.hpp"

namespace cauchykit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&] { throw std::invalid_argument("not a partition: '" + std::string(text) + "'"); };

    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) fail();
            parts.push_back(std::stoi(std::string(text.substr(start, i - start))));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            fail();
        }
    }
    skip_ws();
    if (i != text.size()) fail();
    return Partition(std::move(parts));
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += "]";
    return s;
}

std::string to_string(ParityClass c) {
    switch (c) {
        case ParityClass::Even: return "Even";
        case ParityClass::Odd: return "Odd";
        default: return "Mixed";
    }
}

std::vector<int> staircase(const Partition& lambda, int n) {
    if (lambda.length() > n) throw LengthExceedsN(lambda.length(), n);
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) k[static_cast<std::size_t>(l)] = lambda.part(l) + n - 1 - l;
    return k;
}

namespace {

// Partitions of exactly `weight` with at most `slots` parts, each <= max_part,
// emitted in descending lexicographic order.
void gen_exact_weight(long weight, int max_part, int slots, std::vector<int>& acc,
                      std::vector<Partition>& out) {
    if (weight == 0) {
        out.emplace_back(acc);
        return;
    }
    if (slots == 0) return;
    int hi = static_cast<int>(std::min<long>(max_part, weight));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long>(p) * slots < weight) break; // cannot reach weight anymore
        acc.push_back(p);
        gen_exact_weight(weight - p, p, slots - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> enumerate_bounded(int n, int max_part, long max_weight) {
    std::vector<Partition> out;
    std::vector<int> acc;
    for (long w = 0; w <= max_weight; ++w) gen_exact_weight(w, max_part, n, acc, out);
    return out;
}

} // namespace

std::vector<Partition> enumerate(int n, int k_cap) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k_cap < n - 1) return {}; // no staircase fits
    int max_part = k_cap - n + 1;
    return enumerate_bounded(n, max_part, static_cast<long>(max_part) * n);
}

std::vector<Partition> enumerate_max_weight(int n, long max_weight) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (max_weight < 0) return {};
    return enumerate_bounded(n, static_cast<int>(max_weight), max_weight);
}

Rational c_lambda(const Partition& lambda, int n) {
    Rational c(1);
    for (int k : staircase(lambda, n)) c *= factorial(static_cast<unsigned long>(k));
    return c;
}

Rational p_lambda(const Partition& lambda) {
    Rational p(1);
    for (int part : lambda.parts()) p *= Rational(part);
    return p;
}

Rational b_lambda(std::span<const Rational> b, const Partition& lambda, int n) {
    long degree = static_cast<long>(b.size()) - 1;
    Rational prod(1);
    for (int k : staircase(lambda, n)) {
        if (k > degree) throw IndexOutOfRange(k, degree);
        prod *= b[static_cast<std::size_t>(k)];
    }
    return prod;
}

ParityClass parity_class(const Partition& lambda, int n) {
    bool all_even = true, all_odd = true;
    for (int k : staircase(lambda, n)) {
        if (k % 2 == 0) all_odd = false;
        else all_even = false;
    }
    if (all_even) return ParityClass::Even;
    if (all_odd) return ParityClass::Odd;
    return ParityClass::Mixed;
}

} // namespace cauchykit
