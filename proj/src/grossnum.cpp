#include "lexirank/grossnum.hpp"

#include <ostream>
#include <utility>

namespace lexirank {

std::string_view to_string(Magnitude magnitude) {
    switch (magnitude) {
        case Magnitude::zero: return "zero";
        case Magnitude::infinitesimal: return "infinitesimal";
        case Magnitude::finite: return "finite";
        case Magnitude::infinite: return "infinite";
    }
    return "unknown";
}

Grossnumeral::Grossnumeral(const Rational& constant) {
    add_term(Rational(0), constant);
}

Grossnumeral Grossnumeral::unit() {
    return monomial(Rational(1), Rational(1));
}

Grossnumeral Grossnumeral::monomial(const Rational& coefficient,
                                    const Rational& exponent) {
    Grossnumeral out;
    out.add_term(exponent, coefficient);
    return out;
}

bool Grossnumeral::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

const Rational& Grossnumeral::leading_exponent() const {
    if (is_zero()) {
        throw DomainError("zero grossnumeral has no leading term");
    }
    return terms_.begin()->first;
}

const Rational& Grossnumeral::leading_coefficient() const {
    if (is_zero()) {
        throw DomainError("zero grossnumeral has no leading term");
    }
    return terms_.begin()->second;
}

Rational Grossnumeral::coefficient(const Rational& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Grossnumeral::add_term(const Rational& exponent,
                            const Rational& coefficient) {
    if (coefficient.is_zero()) {
        return;
    }
    const auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Grossnumeral operator+(const Grossnumeral& a, const Grossnumeral& b) {
    Grossnumeral out = a;
    for (const auto& [exponent, coefficient] : b.terms_) {
        out.add_term(exponent, coefficient);
    }
    return out;
}

Grossnumeral operator-(const Grossnumeral& a, const Grossnumeral& b) {
    Grossnumeral out = a;
    for (const auto& [exponent, coefficient] : b.terms_) {
        out.add_term(exponent, -coefficient);
    }
    return out;
}

Grossnumeral operator-(const Grossnumeral& a) {
    Grossnumeral out;
    for (const auto& [exponent, coefficient] : a.terms_) {
        out.terms_.emplace(exponent, -coefficient);
    }
    return out;
}

Grossnumeral operator*(const Grossnumeral& a, const Grossnumeral& b) {
    Grossnumeral out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

std::string Grossnumeral::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [exponent, coefficient] : terms_) {
        const bool negative = coefficient.sign() < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational magnitude = coefficient.abs();
        if (exponent.is_zero()) {
            out += magnitude.to_string();
            continue;
        }
        if (!(magnitude == Rational(1))) {
            out += magnitude.to_string();
            out += '*';
        }
        out += 'G';
        if (!(exponent == Rational(1))) {
            out += '^';
            if (exponent.is_integer()) {
                out += exponent.to_string();
            } else {
                out += '(' + exponent.to_string() + ')';
            }
        }
    }
    return out;
}

std::strong_ordering compare(const Grossnumeral& x, const Grossnumeral& y) {
    const Grossnumeral difference = x - y;
    if (difference.is_zero()) {
        return std::strong_ordering::equal;
    }
    // G dominates: the leading term's sign is the sign of the difference.
    return difference.leading_coefficient().sign() > 0
               ? std::strong_ordering::greater
               : std::strong_ordering::less;
}

Magnitude classify(const Grossnumeral& x) {
    if (x.is_zero()) {
        return Magnitude::zero;
    }
    if (x.leading_exponent().sign() > 0) {
        return Magnitude::infinite;
    }
    if (x.leading_exponent().sign() < 0) {
        return Magnitude::infinitesimal;
    }
    return Magnitude::finite;
}

Grossnumeral sergeyev_rank(const MedalWord& word) {
    Grossnumeral out;
    const std::size_t length = word.length();
    for (std::size_t i = 0; i < length; ++i) {
        const auto letter = word.letters()[i];
        if (letter == 0) {
            continue;
        }
        // Letters are uint64; route through the string constructor since
        // mpz_class takes unsigned long (same width here, but be explicit).
        const Integer count(std::to_string(letter), 10);
        const long place = static_cast<long>(length - 1 - i);
        out = out + Grossnumeral::monomial(Rational(count), Rational(place));
    }
    return out;
}

Rational eval_at_base(const Grossnumeral& x, const Rational& base) {
    if (base.sign() <= 0) {
        throw DomainError("evaluation base must be positive");
    }
    Rational sum(0);
    for (const auto& [exponent, coefficient] : x.terms()) {
        sum += coefficient * rational_pow(base, exponent);
    }
    return sum;
}

Rational comparison_base_bound(const Grossnumeral& x, const Grossnumeral& y) {
    Rational bound(1);
    const Grossnumeral difference = x - y;
    for (const auto& [exponent, coefficient] : difference.terms()) {
        bound += coefficient.abs();
    }
    return bound;
}

namespace {

// Strict growth cap for expanding sums: (a_1 + ... + a_m)^n can hold
// C(n + m - 1, m - 1) terms, so refuse plainly unreasonable requests.
constexpr long kMaxSumPower = 4096;

Grossnumeral integer_power(const Grossnumeral& base, unsigned long n) {
    Grossnumeral result(Rational(1));
    Grossnumeral square = base;
    while (n > 0) {
        if (n & 1UL) {
            result = result * square;
        }
        n >>= 1UL;
        if (n > 0) {
            square = square * square;
        }
    }
    return result;
}

}  // namespace

Grossnumeral pow(const Grossnumeral& x, const Rational& exponent) {
    if (exponent.is_zero()) {
        return Grossnumeral(Rational(1));  // 0^0 = 1 by convention
    }
    if (x.is_zero()) {
        if (exponent.sign() > 0) {
            return Grossnumeral();
        }
        throw DivisionByZero("zero grossnumeral raised to a negative power");
    }
    if (x.is_monomial()) {
        const auto& [e, c] = *x.terms().begin();
        return Grossnumeral::monomial(rational_pow(c, exponent), e * exponent);
    }
    if (!exponent.is_integer() || exponent.sign() < 0) {
        throw PowerUndefined(
            "(" + x.to_string() + ")^(" + exponent.to_string() +
            ") is not a height-1 grossnumeral: quotients and radicals of "
            "general sums leave the ring");
    }
    const Integer n = exponent.numerator();
    if (!mpz_fits_slong_p(n.get_mpz_t()) || mpz_get_si(n.get_mpz_t()) > kMaxSumPower) {
        throw DomainError("integer exponent too large for a non-monomial base "
                          "(limit " +
                          std::to_string(kMaxSumPower) + ")");
    }
    return integer_power(x, mpz_get_ui(n.get_mpz_t()));
}

std::ostream& operator<<(std::ostream& out, const Grossnumeral& value) {
    return out << value.to_string();
}

}  // namespace lexirank
