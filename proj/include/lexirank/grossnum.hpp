#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "lexirank/medal_word.hpp"
#include "lexirank/rational.hpp"

namespace lexirank {

enum class Magnitude { zero, infinitesimal, finite, infinite };

std::string_view to_string(Magnitude magnitude);

// Height-1 grossnumeral: a finite formal sum sum_i c_i * G^{e_i} with
// nonzero rational coefficients and strictly decreasing rational
// exponents. G is a formal symbol larger than every rational, so the
// leading term decides every comparison. This is exactly the polynomial
// ring Q[G^Q]; it has no division and no elementary functions, and the
// symbol never appears inside an exponent (towers are rejected upstream
// as HeightUnsupported).
class Grossnumeral {
public:
    // Exponents descending, so begin() is the leading term.
    using TermMap = std::map<Rational, Rational, std::greater<Rational>>;

    Grossnumeral() = default;                   // zero
    Grossnumeral(const Rational& constant);     // NOLINT: constants embed
    Grossnumeral(long constant) : Grossnumeral(Rational(constant)) {}

    static Grossnumeral unit();  // G itself
    static Grossnumeral monomial(const Rational& coefficient,
                                 const Rational& exponent);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;   // zero or a single G^0 term
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading = largest exponent. Both require a nonzero value.
    const Rational& leading_exponent() const;
    const Rational& leading_coefficient() const;

    // Coefficient of G^exponent, 0 when absent.
    Rational coefficient(const Rational& exponent) const;

    // "5*G^3 + 12*G + 1" style; unit coefficients elided, G^0 omitted,
    // non-integer exponents parenthesized: "G^(1/2)". Round-trips through
    // the gross dialect of the expression parser.
    std::string to_string() const;

    friend Grossnumeral operator+(const Grossnumeral& a, const Grossnumeral& b);
    friend Grossnumeral operator-(const Grossnumeral& a, const Grossnumeral& b);
    friend Grossnumeral operator*(const Grossnumeral& a, const Grossnumeral& b);
    friend Grossnumeral operator-(const Grossnumeral& a);
    friend bool operator==(const Grossnumeral&, const Grossnumeral&) = default;

private:
    void add_term(const Rational& exponent, const Rational& coefficient);

    TermMap terms_;
};

// Total order: sign of the leading term of x - y. Decidable for every
// pair at height 1; this single routine backs all ranking claims.
std::strong_ordering compare(const Grossnumeral& x, const Grossnumeral& y);

// zero / infinitesimal (nonzero, all exponents < 0) / finite (bounded,
// nonzero standard part or mixed below G^0) / infinite (some exponent > 0).
Magnitude classify(const Grossnumeral& x);

// The positional ranking number sum_i w_i * G^{L-i} of a medal word
// (zero counts contribute nothing).
Grossnumeral sergeyev_rank(const MedalWord& word);

// Exact substitution G := base (base > 0). Rational exponents require the
// corresponding exact root of the base; otherwise
// RationalPowerUnavailable.
Rational eval_at_base(const Grossnumeral& x, const Rational& base);

// 1 + sum of |coefficients| of x - y: every rational base strictly above
// this bound makes the sign of eval_at_base(x) - eval_at_base(y) agree
// with compare(x, y), provided x - y has integer exponents and its
// leading coefficient is at least 1 in magnitude (integer coefficients
// suffice).
Rational comparison_base_bound(const Grossnumeral& x, const Grossnumeral& y);

// x^exponent where the result stays in the ring: any monomial to a
// rational power (exact coefficient roots required), a general sum only
// to a nonnegative integer power. PowerUndefined / DomainError otherwise.
Grossnumeral pow(const Grossnumeral& x, const Rational& exponent);

std::ostream& operator<<(std::ostream& out, const Grossnumeral& value);

}  // namespace lexirank
