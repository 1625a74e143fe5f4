#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include "lexirank/rational.hpp"

namespace lexirank {

// Truncated Levi-Civita field element: a finite sum of terms c * d^q
// with binary64 coefficients and rational exponents, where d is a
// positive infinitesimal. Terms are kept sorted by exponent ascending;
// since smaller powers of d dominate, begin() is the leading term.
//
// Every value carries a truncation depth N: after each operation only
// the N smallest-exponent terms survive (mixed-depth operands take the
// larger N), and coefficients with |c| < 1e-300 are dropped as zeros.
// Within that window addition and multiplication are exact up to float
// rounding, and series (inversion, powers, sin/cos/exp) terminate
// because each further term only raises the valuation.
class LCNumber {
public:
    using TermMap = std::map<Rational, double>;

    static constexpr int kDefaultDepth = 10;
    static constexpr double kZeroThreshold = 1e-300;

    LCNumber() = default;  // zero

    // Requires depth >= 1 (DomainError otherwise).
    static LCNumber constant(double value, int depth = kDefaultDepth);
    static LCNumber infinitesimal(int depth = kDefaultDepth);  // d itself
    static LCNumber monomial(double coefficient, const Rational& exponent,
                             int depth = kDefaultDepth);

    int depth() const { return depth_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of d^exponent, 0.0 when absent.
    double coefficient(const Rational& exponent) const;

    // Smallest (dominating) exponent; requires a nonzero value.
    const Rational& valuation() const;

    // True when any term has a negative exponent (an unbounded part).
    bool has_infinite_part() const;

    // The d^0 coefficient.
    double real_part() const { return coefficient(Rational(0)); }

    // "2 + 3*d^2 - 0.5*d^-1" style, terms by ascending exponent, doubles
    // printed shortest-round-trip; coefficients with |c| < suppress_below
    // are omitted (0.0 keeps everything). Round-trips through the lc
    // dialect of the expression parser.
    std::string to_string(double suppress_below = 0.0) const;

    friend LCNumber operator+(const LCNumber& a, const LCNumber& b);
    friend LCNumber operator-(const LCNumber& a, const LCNumber& b);
    friend LCNumber operator*(const LCNumber& a, const LCNumber& b);
    friend LCNumber operator-(const LCNumber& a);
    friend bool operator==(const LCNumber& a, const LCNumber& b) {
        return a.terms_ == b.terms_;
    }

private:
    friend LCNumber invert(const LCNumber& x);
    friend LCNumber pow(const LCNumber& x, const Rational& exponent);

    void add_term(const Rational& exponent, double coefficient);
    void normalize();

    TermMap terms_;
    int depth_ = kDefaultDepth;
};

// 1/x by leading-monomial factorization and a geometric tail series.
// DivisionByZero on zero.
LCNumber invert(const LCNumber& x);

// x^exponent. Integer exponents work for any nonzero x (repeated
// multiplication, inversion for negatives). Fractional exponents use the
// binomial series about the leading monomial and require a positive
// leading coefficient (PowerUndefined otherwise).
LCNumber pow(const LCNumber& x, const Rational& exponent);

// Elementary functions by Taylor transfer about the real part: defined
// exactly for finite-plus-infinitesimal arguments. An argument with an
// infinite part raises TransferUnavailable.
LCNumber sin(const LCNumber& x);
LCNumber cos(const LCNumber& x);
LCNumber exp(const LCNumber& x);

// Order by the sign of the leading term of x - y (d is a positive
// infinitesimal, so the smallest exponent of the difference decides).
std::strong_ordering compare(const LCNumber& x, const LCNumber& y);

// n-th derivative of f at a, read off algebraically: evaluate f at a + d
// and return n! times the d^n coefficient. No step sizes, no difference
// quotients. Requires 1 <= order < depth (DomainError otherwise); errors
// from f itself (poles, transfer failures) propagate.
double derivative(const std::function<LCNumber(const LCNumber&)>& f,
                  const Rational& at, int order,
                  int depth = LCNumber::kDefaultDepth);

std::ostream& operator<<(std::ostream& out, const LCNumber& value);

}  // namespace lexirank
