#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexirank {

// Root of the library's error hierarchy. Everything thrown on purpose
// derives from this; anything else escaping the library is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. `position()` is a 0-based byte offset for
// expression input and a 1-based line number for CSV input (the message
// states which).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An identifier that does not exist in the active dialect.
class UnknownSymbol : public ParseError {
public:
    using ParseError::ParseError;
};

// Value outside an operation's domain. Base of the math-error family.
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
public:
    using DomainError::DomainError;
};

// A rational that is not of the form m / 2^k with 0 <= m/2^k < 1.
class NotDyadicRank : public DomainError {
public:
    using DomainError::DomainError;
};

// A power whose result is not representable in the target structure.
class PowerUndefined : public DomainError {
public:
    using DomainError::DomainError;
};

// base^(a/b) requested where no exact rational b-th root exists.
class RationalPowerUnavailable : public DomainError {
public:
    using DomainError::DomainError;
};

// `G` nested inside an exponent. No comparison algorithm is known for
// such towers, so they are rejected outright rather than guessed at.
class HeightUnsupported : public Error {
public:
    using Error::Error;
};

// An elementary function applied where no transfer principle reaches:
// sine/cosine/exponential of an element with an infinite part, or of a
// grossnumeral at all.
class TransferUnavailable : public Error {
public:
    using Error::Error;
};

}  // namespace lexirank
