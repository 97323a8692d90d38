#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cauchykit/rational.hpp"

namespace cauchykit {

/// Integer partition: weakly decreasing nonnegative parts. Trailing zeros are
/// stripped on construction, so equality and length() see the canonical form.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition parse(std::string_view text); // "[3,1]", empty partition "[]"

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    int part(int l) const { return l < length() ? parts_[static_cast<std::size_t>(l)] : 0; }

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
};

enum class ParityClass { Even, Odd, Mixed };

std::string to_string(ParityClass c);

/// Staircase exponents k_l = lambda_l + n - l for l = 1..n; strictly decreasing.
std::vector<int> staircase(const Partition& lambda, int n);

/// All lambda with l(lambda) <= n whose staircase exponents are all <= k_cap
/// (equivalently lambda_1 + n - 1 <= k_cap), ordered by ascending weight and
/// descending lexicographic within a weight. Empty when k_cap < n - 1.
std::vector<Partition> enumerate(int n, int k_cap);

/// All lambda with l(lambda) <= n and |lambda| <= max_weight, same ordering.
std::vector<Partition> enumerate_max_weight(int n, long max_weight);

/// C_lambda: product of factorials of the staircase exponents.
Rational c_lambda(const Partition& lambda, int n);

/// P_lambda: product of the positive parts (1 for the empty partition).
Rational p_lambda(const Partition& lambda);

/// B_lambda: product of polynomial coefficients b at the staircase indices.
/// Throws IndexOutOfRange when a staircase exponent exceeds the degree.
Rational b_lambda(std::span<const Rational> b, const Partition& lambda, int n);

ParityClass parity_class(const Partition& lambda, int n);

} // namespace cauchykit
