#include "lexirank/rational.hpp"

#include <ostream>

namespace lexirank {

namespace {

mpq_class make_canonical(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    mpq_class v;
    mpq_set_num(v.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(v.get_mpq_t(), den.get_mpz_t());
    v.canonicalize();
    return v;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator)
    : value_(make_canonical(numerator, denominator)) {}

Rational::Rational(long numerator, long denominator)
    : value_(make_canonical(Integer(numerator), Integer(denominator))) {}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw DivisionByZero("division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) {
        return Rational(1);
    }
    if (is_zero()) {
        if (exponent < 0) {
            throw DivisionByZero("zero raised to a negative power");
        }
        return Rational(0);
    }
    const unsigned long magnitude =
        exponent < 0 ? -static_cast<unsigned long>(exponent)
                     : static_cast<unsigned long>(exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), magnitude);
    mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), magnitude);
    return exponent > 0 ? Rational(num, den) : Rational(den, num);
}

std::string Rational::to_string() const {
    std::string text = numerator().get_str();
    if (!is_integer()) {
        text += "/";
        text += denominator().get_str();
    }
    return text;
}

namespace {

// Exact b-th root of n, or failure. Negative n is fine for odd b.
bool exact_root(const Integer& n, unsigned long b, Integer& out) {
    if (sgn(n) < 0 && b % 2 == 0) {
        return false;
    }
    return mpz_root(out.get_mpz_t(), n.get_mpz_t(), b) != 0;
}

}  // namespace

Rational rational_pow(const Rational& base, const Rational& exponent) {
    if (exponent.is_zero()) {
        return Rational(1);  // includes 0^0 = 1 by convention
    }
    if (base.is_zero()) {
        if (exponent.sign() > 0) {
            return Rational(0);
        }
        throw DivisionByZero("zero raised to a negative power");
    }

    const Integer a = exponent.numerator();
    const Integer b = exponent.denominator();

    Rational root = base;
    if (b != 1) {
        if (base == Rational(1)) {
            return Rational(1);
        }
        if (!mpz_fits_ulong_p(b.get_mpz_t())) {
            throw RationalPowerUnavailable(
                "no exact rational root of index " + b.get_str());
        }
        const unsigned long index = mpz_get_ui(b.get_mpz_t());
        Integer root_num, root_den;
        if (!exact_root(base.numerator(), index, root_num) ||
            !exact_root(base.denominator(), index, root_den)) {
            throw RationalPowerUnavailable(
                "(" + base.to_string() + ")^(" + exponent.to_string() +
                ") has no exact rational value");
        }
        root = Rational(root_num, root_den);
    }

    if (!mpz_fits_slong_p(a.get_mpz_t())) {
        throw DomainError("exponent " + a.get_str() + " is too large to expand");
    }
    return root.pow(mpz_get_si(a.get_mpz_t()));
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
    return out << value.to_string();
}

}  // namespace lexirank
