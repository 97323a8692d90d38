#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cauchykit {

// Base class for every error this library raises deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroConstantTerm : public Error {
public:
    ZeroConstantTerm() : Error("series has zero constant term, no reciprocal") {}
};

class DivisionByZeroSeries : public Error {
public:
    DivisionByZeroSeries() : Error("division by a series with zero constant term") {}
};

class LengthExceedsN : public Error {
public:
    LengthExceedsN(std::size_t len, std::size_t n)
        : Error("partition has " + std::to_string(len) + " parts, more than n = " + std::to_string(n)) {}
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(long index, long bound)
        : Error("coefficient index " + std::to_string(index) + " exceeds degree " + std::to_string(bound)) {}
};

class RepeatedPoints : public Error {
public:
    RepeatedPoints() : Error("point vector has repeated entries") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected)
        : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(expected) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class UnsupportedComposition : public Error {
public:
    explicit UnsupportedComposition(const std::string& detail)
        : Error("unsupported composition: " + detail) {}
};

class OutsideRadius : public Error {
public:
    OutsideRadius() : Error("evaluation point lies outside the radius of convergence") {}
};

class UnsupportedAnalyticEval : public Error {
public:
    UnsupportedAnalyticEval()
        : Error("analytic evaluation is only supported for catalog functions and polynomials") {}
};

class SingularEntry : public Error {
public:
    SingularEntry() : Error("some product a_j * x_i equals 1, matrix entry is singular") {}
};

class NotStrictlyDecreasing : public Error {
public:
    NotStrictlyDecreasing() : Error("exponent sequence must be strictly decreasing and nonnegative") {}
};

class InvalidConfig : public Error {
public:
    explicit InvalidConfig(const std::string& detail) : Error("invalid configuration: " + detail) {}
};

} // namespace cauchykit
