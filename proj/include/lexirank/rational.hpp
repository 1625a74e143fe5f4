#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lexirank/errors.hpp"

namespace lexirank {

// Arbitrary-size signed integer. All exact paths run on these; nothing
// in the exact kernel touches fixed-width arithmetic.
using Integer = mpz_class;

// Arbitrary-precision rational kept in canonical reduced form:
// denominator > 0 and gcd(|numerator|, denominator) = 1. Immutable value
// type; all operations are exact.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: integers embed implicitly
    explicit Rational(const Integer& n) : value_(n) {}
    Rational(const Integer& numerator, const Integer& denominator);
    Rational(long numerator, long denominator);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    Rational abs() const;

    // Exact integer power. A negative exponent requires a nonzero base.
    Rational pow(long exponent) const;

    // Nearest-or-truncated binary64 image (GMP rounds the quotient toward
    // zero; error is below one ulp). Fine for seeding float computations,
    // never used on an exact path.
    double to_double() const { return value_.get_d(); }

    // "n" when integral, "n/d" otherwise; round-trips through the
    // expression parser.
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ + b.value_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ - b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.value_ * b.value_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) {
        return Rational(mpq_class(-a.value_));
    }

    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
    Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

// Exact base^exponent for a rational exponent a/b: takes the exact b-th
// root when one exists in Q, then the integer power. Throws
// RationalPowerUnavailable when the root is irrational (or complex),
// DivisionByZero for zero base with exponent <= 0 (except 0^0 = 1),
// DomainError for exponents too large to expand.
Rational rational_pow(const Rational& base, const Rational& exponent);

std::ostream& operator<<(std::ostream& out, const Rational& value);

}  // namespace lexirank
