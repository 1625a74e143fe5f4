#include "lexirank/dyadic.hpp"

#include <ostream>
#include <utility>

namespace lexirank {

Dyadic::Dyadic(Integer mantissa, unsigned long scale) {
    if (sgn(mantissa) < 0) {
        throw DomainError("dyadic mantissa must be nonnegative");
    }
    if (mpz_sizeinbase(mantissa.get_mpz_t(), 2) > scale && sgn(mantissa) != 0) {
        throw DomainError("dyadic value must lie in [0,1)");
    }
    if (sgn(mantissa) == 0) {
        return;  // canonical zero: 0 / 2^0
    }
    const unsigned long trailing = mpz_scan1(mantissa.get_mpz_t(), 0);
    if (trailing > 0) {
        mantissa >>= trailing;
        scale -= trailing;
    }
    mantissa_ = std::move(mantissa);
    scale_ = scale;
}

Dyadic Dyadic::from_rational(const Rational& value) {
    if (value.sign() < 0 || value >= Rational(1)) {
        throw NotDyadicRank("rank must lie in [0,1): " + value.to_string());
    }
    const Integer den = value.denominator();
    if (mpz_popcount(den.get_mpz_t()) != 1) {
        throw NotDyadicRank("denominator of " + value.to_string() +
                            " is not a power of two");
    }
    const unsigned long scale = mpz_scan1(den.get_mpz_t(), 0);
    return Dyadic(value.numerator(), scale);
}

Dyadic Dyadic::from_binary_string(std::string_view text) {
    if (text == "0") {
        return Dyadic();
    }
    if (text.size() < 3 || text[0] != '0' || text[1] != '.') {
        throw ParseError("binary rank must be \"0\" or \"0.<bits>\"", 0);
    }
    Integer mantissa = 0;
    for (std::size_t i = 2; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw ParseError(std::string("invalid binary digit '") + c +
                                 "' at position " + std::to_string(i),
                             i);
        }
        mantissa <<= 1;
        if (c == '1') {
            mantissa += 1;
        }
    }
    return Dyadic(std::move(mantissa), text.size() - 2);
}

Rational Dyadic::to_rational() const {
    Integer den = 1;
    den <<= scale_;
    return Rational(mantissa_, den);
}

std::string Dyadic::to_binary_string() const {
    if (is_zero()) {
        return "0";
    }
    const std::string bits = mantissa_.get_str(2);
    std::string out = "0.";
    out.append(scale_ - bits.size(), '0');
    out += bits;
    return out;
}

std::string Dyadic::to_decimal_string(int digits) const {
    if (digits < 1) {
        throw DomainError("decimal digit count must be at least 1");
    }
    Integer scaled;
    mpz_ui_pow_ui(scaled.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    scaled *= mantissa_;
    scaled >>= scale_;  // floor = truncation toward zero (value >= 0)
    const std::string body = scaled.get_str();
    std::string out = "0.";
    out.append(static_cast<std::size_t>(digits) - body.size(), '0');
    out += body;
    return out;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const unsigned long scale = std::max(a.scale_, b.scale_);
    Integer left = a.mantissa_;
    left <<= scale - a.scale_;
    Integer right = b.mantissa_;
    right <<= scale - b.scale_;
    const int c = cmp(left, right);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const Dyadic& value) {
    return out << value.to_binary_string();
}

}  // namespace lexirank
