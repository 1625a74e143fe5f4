#include "lexirank/levicivita.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

namespace lexirank {

namespace {

void check_depth(int depth) {
    if (depth < 1) {
        throw DomainError("truncation depth must be at least 1");
    }
}

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

}  // namespace

LCNumber LCNumber::constant(double value, int depth) {
    check_depth(depth);
    LCNumber out;
    out.depth_ = depth;
    out.add_term(Rational(0), value);
    out.normalize();
    return out;
}

LCNumber LCNumber::infinitesimal(int depth) {
    return monomial(1.0, Rational(1), depth);
}

LCNumber LCNumber::monomial(double coefficient, const Rational& exponent,
                            int depth) {
    check_depth(depth);
    LCNumber out;
    out.depth_ = depth;
    out.add_term(exponent, coefficient);
    out.normalize();
    return out;
}

double LCNumber::coefficient(const Rational& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? 0.0 : it->second;
}

const Rational& LCNumber::valuation() const {
    if (is_zero()) {
        throw DomainError("zero has no valuation");
    }
    return terms_.begin()->first;
}

bool LCNumber::has_infinite_part() const {
    return !terms_.empty() && terms_.begin()->first.sign() < 0;
}

void LCNumber::add_term(const Rational& exponent, double coefficient) {
    const auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
    }
}

void LCNumber::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::fabs(it->second) < kZeroThreshold) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    if (terms_.size() > static_cast<std::size_t>(depth_)) {
        auto it = terms_.begin();
        std::advance(it, depth_);
        terms_.erase(it, terms_.end());
    }
}

LCNumber operator+(const LCNumber& a, const LCNumber& b) {
    LCNumber out = a;
    out.depth_ = std::max(a.depth_, b.depth_);
    for (const auto& [exponent, coefficient] : b.terms_) {
        out.add_term(exponent, coefficient);
    }
    out.normalize();
    return out;
}

LCNumber operator-(const LCNumber& a, const LCNumber& b) {
    LCNumber out = a;
    out.depth_ = std::max(a.depth_, b.depth_);
    for (const auto& [exponent, coefficient] : b.terms_) {
        out.add_term(exponent, -coefficient);
    }
    out.normalize();
    return out;
}

LCNumber operator*(const LCNumber& a, const LCNumber& b) {
    LCNumber out;
    out.depth_ = std::max(a.depth_, b.depth_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    out.normalize();
    return out;
}

LCNumber operator-(const LCNumber& a) {
    LCNumber out = a;
    for (auto& [exponent, coefficient] : out.terms_) {
        coefficient = -coefficient;
    }
    return out;
}

std::string LCNumber::to_string(double suppress_below) const {
    std::string out;
    bool first = true;
    for (const auto& [exponent, coefficient] : terms_) {
        if (std::fabs(coefficient) < suppress_below) {
            continue;
        }
        const bool negative = coefficient < 0.0;
        if (first) {
            if (negative) {
                out += '-';
            }
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const double magnitude = std::fabs(coefficient);
        if (exponent.is_zero()) {
            out += format_double(magnitude);
            continue;
        }
        if (magnitude != 1.0) {
            out += format_double(magnitude);
            out += '*';
        }
        out += 'd';
        if (!(exponent == Rational(1))) {
            out += '^';
            if (exponent.is_integer()) {
                out += exponent.to_string();
            } else {
                out += '(' + exponent.to_string() + ')';
            }
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// True once `series` holds a full window and `candidate_valuation` falls
// beyond it: every further term of the tail series would be truncated
// away, so the expansion loop may stop.
bool beyond_window(const LCNumber& series, const LCNumber& power) {
    return series.terms().size() >= static_cast<std::size_t>(series.depth()) &&
           power.valuation() > series.terms().rbegin()->first;
}

}  // namespace

LCNumber invert(const LCNumber& x) {
    if (x.is_zero()) {
        throw DivisionByZero("division by zero");
    }
    const Rational v = x.valuation();
    const double lead = x.terms().begin()->second;

    // x = lead * d^v * (1 + u) with val(u) > 0, so
    // 1/x = (1/lead) * d^-v * (1 - u + u^2 - ...). Each extra power of u
    // raises the valuation, so the loop exits once the truncation window
    // is saturated (or the tail underflows to zero).
    LCNumber u = LCNumber::constant(0.0, x.depth());
    for (auto it = std::next(x.terms().begin()); it != x.terms().end(); ++it) {
        u.add_term(it->first - v, it->second / lead);
    }
    u.normalize();

    LCNumber series = LCNumber::constant(1.0, x.depth());
    LCNumber power = series;
    const LCNumber negated = -u;
    while (true) {
        power = power * negated;
        if (power.is_zero() || beyond_window(series, power)) {
            break;
        }
        series = series + power;
    }

    LCNumber out = LCNumber::constant(0.0, x.depth());
    for (const auto& [exponent, coefficient] : series.terms()) {
        out.add_term(exponent - v, coefficient / lead);
    }
    out.normalize();
    return out;
}

namespace {

LCNumber integer_power(const LCNumber& base, unsigned long n) {
    LCNumber result = LCNumber::constant(1.0, base.depth());
    LCNumber square = base;
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

LCNumber pow(const LCNumber& x, const Rational& exponent) {
    if (exponent.is_zero()) {
        return LCNumber::constant(1.0, x.depth());
    }
    if (x.is_zero()) {
        if (exponent.sign() > 0) {
            return LCNumber::constant(0.0, x.depth());
        }
        throw DivisionByZero("zero raised to a negative power");
    }
    if (exponent.is_integer()) {
        const Integer n = exponent.numerator();
        if (!mpz_fits_slong_p(n.get_mpz_t())) {
            throw DomainError("exponent " + n.get_str() + " is too large");
        }
        const long signed_n = mpz_get_si(n.get_mpz_t());
        const LCNumber base = signed_n < 0 ? invert(x) : x;
        const unsigned long magnitude =
            signed_n < 0 ? -static_cast<unsigned long>(signed_n)
                         : static_cast<unsigned long>(signed_n);
        return integer_power(base, magnitude);
    }

    // Binomial series about the leading monomial: x = lead * d^v * (1+u),
    // x^q = lead^q * d^(v q) * sum_k C(q,k) u^k. The real branch needs a
    // positive leading coefficient.
    const double lead = x.terms().begin()->second;
    if (lead <= 0.0) {
        throw PowerUndefined(
            "fractional power requires a positive leading coefficient");
    }
    const Rational v = x.valuation();
    LCNumber u = LCNumber::constant(0.0, x.depth());
    for (auto it = std::next(x.terms().begin()); it != x.terms().end(); ++it) {
        u.add_term(it->first - v, it->second / lead);
    }
    u.normalize();

    LCNumber series = LCNumber::constant(1.0, x.depth());
    LCNumber power = series;
    Rational binomial(1);
    for (long k = 1;; ++k) {
        binomial = binomial * (exponent - Rational(k - 1)) / Rational(k);
        power = power * u;
        if (power.is_zero() || beyond_window(series, power)) {
            break;
        }
        series = series +
                 LCNumber::constant(binomial.to_double(), x.depth()) * power;
    }

    const double factor = std::pow(lead, exponent.to_double());
    const Rational shift = v * exponent;
    LCNumber out = LCNumber::constant(0.0, x.depth());
    for (const auto& [e, coefficient] : series.terms()) {
        out.add_term(e + shift, coefficient * factor);
    }
    out.normalize();
    return out;
}

namespace {

// Taylor transfer about the real part a: f(a + h) = sum_k f^(k)(a)/k! h^k
// for the purely infinitesimal h = x - a. Arguments with an infinite part
// have no such expansion.
template <typename DerivativeFn>
LCNumber taylor_about_real(const LCNumber& x, const char* function_name,
                           DerivativeFn&& derivative_at_a) {
    if (x.has_infinite_part()) {
        throw TransferUnavailable(
            std::string(function_name) +
            " of an infinite element is undefined in this field: elementary "
            "functions only transfer to finite-plus-infinitesimal arguments");
    }
    const int depth = x.depth();
    const LCNumber h = x - LCNumber::constant(x.real_part(), depth);
    LCNumber series = LCNumber::constant(derivative_at_a(0), depth);
    LCNumber power = LCNumber::constant(1.0, depth);
    double inv_factorial = 1.0;
    for (int k = 1;; ++k) {
        inv_factorial /= k;
        power = power * h;
        if (power.is_zero() || beyond_window(series, power)) {
            break;
        }
        series = series + LCNumber::constant(derivative_at_a(k) * inv_factorial,
                                             depth) *
                              power;
    }
    return series;
}

}  // namespace

LCNumber sin(const LCNumber& x) {
    const double s = std::sin(x.real_part());
    const double c = std::cos(x.real_part());
    const double cycle[4] = {s, c, -s, -c};
    return taylor_about_real(x, "sine", [&cycle](int k) { return cycle[k % 4]; });
}

LCNumber cos(const LCNumber& x) {
    const double s = std::sin(x.real_part());
    const double c = std::cos(x.real_part());
    const double cycle[4] = {c, -s, -c, s};
    return taylor_about_real(x, "cosine",
                             [&cycle](int k) { return cycle[k % 4]; });
}

LCNumber exp(const LCNumber& x) {
    const double scale = std::exp(x.real_part());
    return taylor_about_real(x, "exponential",
                             [scale](int) { return scale; });
}

std::strong_ordering compare(const LCNumber& x, const LCNumber& y) {
    const LCNumber difference = x - y;
    if (difference.is_zero()) {
        return std::strong_ordering::equal;
    }
    return difference.terms().begin()->second > 0.0
               ? std::strong_ordering::greater
               : std::strong_ordering::less;
}

double derivative(const std::function<LCNumber(const LCNumber&)>& f,
                  const Rational& at, int order, int depth) {
    if (order < 1 || order >= depth) {
        throw DomainError(
            "derivative order must satisfy 1 <= order < depth (got order " +
            std::to_string(order) + ", depth " + std::to_string(depth) + ")");
    }
    const LCNumber x =
        LCNumber::constant(at.to_double(), depth) + LCNumber::infinitesimal(depth);
    const LCNumber value = f(x);
    Integer factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(order));
    return factorial.get_d() * value.coefficient(Rational(order));
}

std::ostream& operator<<(std::ostream& out, const LCNumber& value) {
    return out << value.to_string();
}

}  // namespace lexirank
