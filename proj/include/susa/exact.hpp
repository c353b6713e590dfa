#ifndef SUSA_EXACT_HPP
#define SUSA_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

#include "susa/errors.hpp"

namespace susa {

using BigInt = boost::multiprecision::cpp_int;

/// Signed arbitrary-precision rational, the universal value type of the
/// engine. Always stored reduced with a positive denominator; zero is 0/1.
class ExactNumber {
public:
    ExactNumber() : v_(0) {}
    ExactNumber(long long n) : v_(n) {}
    ExactNumber(const BigInt& n) : v_(n) {}

    ExactNumber(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }
    ExactNumber(long long num, long long den)
        : ExactNumber(BigInt(num), BigInt(den)) {}

    // Accepts "p/q" or a plain integer string.
    static ExactNumber from_string(const std::string& text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    friend ExactNumber operator+(const ExactNumber& a, const ExactNumber& b) {
        return ExactNumber(a.v_ + b.v_);
    }
    friend ExactNumber operator-(const ExactNumber& a, const ExactNumber& b) {
        return ExactNumber(a.v_ - b.v_);
    }
    friend ExactNumber operator*(const ExactNumber& a, const ExactNumber& b) {
        return ExactNumber(a.v_ * b.v_);
    }
    friend ExactNumber operator/(const ExactNumber& a, const ExactNumber& b) {
        if (b.is_zero())
            throw Error(ErrorCode::DivisionByZero, "division by zero");
        return ExactNumber(a.v_ / b.v_);
    }
    ExactNumber operator-() const { return ExactNumber(-v_); }

    ExactNumber& operator+=(const ExactNumber& o) { v_ += o.v_; return *this; }
    ExactNumber& operator-=(const ExactNumber& o) { v_ -= o.v_; return *this; }
    ExactNumber& operator*=(const ExactNumber& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const ExactNumber& a, const ExactNumber& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const ExactNumber& a, const ExactNumber& b) {
        return a.v_ != b.v_;
    }
    friend bool operator<(const ExactNumber& a, const ExactNumber& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExactNumber& a, const ExactNumber& b) {
        return a.v_ <= b.v_;
    }
    friend bool operator>(const ExactNumber& a, const ExactNumber& b) {
        return a.v_ > b.v_;
    }
    friend bool operator>=(const ExactNumber& a, const ExactNumber& b) {
        return a.v_ >= b.v_;
    }

private:
    explicit ExactNumber(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

inline ExactNumber add(const ExactNumber& a, const ExactNumber& b) { return a + b; }
inline ExactNumber mul(const ExactNumber& a, const ExactNumber& b) { return a * b; }
inline ExactNumber div(const ExactNumber& a, const ExactNumber& b) { return a / b; }
inline ExactNumber neg(const ExactNumber& a) { return -a; }
inline ExactNumber halve(const ExactNumber& a) { return a * ExactNumber(1, 2); }
inline ExactNumber square(const ExactNumber& a) { return a * a; }

/// Scribal-mode subtraction: only a smaller number may be taken from a
/// greater one.
inline ExactNumber checked_sub(const ExactNumber& a, const ExactNumber& b) {
    if (b > a)
        throw Error(ErrorCode::NegativeResult,
                    "subtraction would go negative: " + b.to_string() +
                        " > " + a.to_string());
    return a - b;
}

ExactNumber pow(const ExactNumber& base, long long exponent);

} // namespace susa

#endif
