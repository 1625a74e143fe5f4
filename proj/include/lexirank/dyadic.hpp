#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lexirank/rational.hpp"

namespace lexirank {

// Dyadic rational m / 2^k confined to [0, 1), canonical: either the
// mantissa is odd, or the value is zero with scale zero. The binary
// expansion "0.b1 b2 ... bk" therefore never ends in a redundant 0.
class Dyadic {
public:
    Dyadic() = default;  // zero

    // m / 2^scale; requires 0 <= m < 2^scale (so the value lies in [0,1)).
    // Trailing zero bits are stripped on construction.
    Dyadic(Integer mantissa, unsigned long scale);

    // Exact conversion from a general rational. Throws NotDyadicRank when
    // the value is outside [0,1) or the reduced denominator is not a
    // power of two.
    static Dyadic from_rational(const Rational& value);

    // Parses "0" or "0.<bits>". Redundant trailing zero bits are accepted
    // and canonicalized away. Anything else is a ParseError.
    static Dyadic from_binary_string(std::string_view text);

    const Integer& mantissa() const { return mantissa_; }
    unsigned long scale() const { return scale_; }
    bool is_zero() const { return sgn(mantissa_) == 0; }

    Rational to_rational() const;

    // "0" for zero, otherwise "0." followed by exactly scale() bits
    // (no trailing zeros, by canonicity).
    std::string to_binary_string() const;

    // The exact decimal expansion cut (truncated toward zero) to `digits`
    // fractional digits: "0.5000000" style. Requires digits >= 1.
    std::string to_decimal_string(int digits) const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.scale_ == b.scale_ && a.mantissa_ == b.mantissa_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
    Integer mantissa_ = 0;
    unsigned long scale_ = 0;
};

std::ostream& operator<<(std::ostream& out, const Dyadic& value);

}  // namespace lexirank
