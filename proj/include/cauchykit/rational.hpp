#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cauchykit {

/// Exact rational number. Always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, so equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rational parse(std::string_view text) {
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0)
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
        q.canonicalize();
        return Rational(std::move(q));
    }

    // Exact binary expansion of the double, no rounding.
    static Rational from_double(double d) {
        mpq_class q;
        mpq_set_d(q.get_mpq_t(), d);
        return Rational(std::move(q));
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
        return Rational(std::move(r)); // powers of a canonical fraction stay canonical
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const {
        return v_.get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    mpq_class v_;
};

inline Rational factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

inline Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace cauchykit
