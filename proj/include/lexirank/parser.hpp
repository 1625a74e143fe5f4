#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "lexirank/grossnum.hpp"
#include "lexirank/levicivita.hpp"
#include "lexirank/medal_word.hpp"
#include "lexirank/rational.hpp"

namespace lexirank {

// Input dialects: gross admits the symbol G, lc admits the infinitesimal
// d (plus x when explicitly allowed, for derivative expressions), word is
// the comma-separated medal notation handled by parse_word.
enum class Dialect { gross, lc, word };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// A numeric literal keeps both views of the source token: the exact
// rational it denotes and its original spelling, so float consumers can
// convert the decimal directly (correctly rounded) instead of going
// through the rational.
struct LiteralNode {
    Rational value;
    std::string text;
};

struct SymbolNode {
    char name;  // 'G', 'd', or 'x'
};

struct NegateNode {
    ExprPtr operand;
};

struct BinaryNode {
    char op;  // '+', '-', '*', '/', '^'
    ExprPtr lhs;
    ExprPtr rhs;
};

enum class Builtin { sin, cos, exp };

struct CallNode {
    Builtin function;
    ExprPtr argument;
};

struct Expr {
    std::variant<LiteralNode, SymbolNode, NegateNode, BinaryNode, CallNode> node;
    std::size_t position = 0;
};

// Grammar, shared by both expression dialects:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | symbol | name '(' expr ')' | '(' expr ')'
//
// so G^2^3 = G^(2^3) and -G^2 = -(G^2), while G^-1 parses directly.
// In the gross dialect G inside an exponent raises HeightUnsupported and
// sin/cos/exp raise TransferUnavailable; unknown identifiers raise
// UnknownSymbol in either dialect.
ExprPtr parse_expression(std::string_view text, Dialect dialect,
                         bool allow_x = false);

// Word dialect: comma-separated nonnegative integers ("13,11,9"); the
// empty string is the empty word.
MedalWord parse_word(std::string_view text);

Grossnumeral evaluate_gross(const Expr& expr);

// Evaluates in the truncated field at the given depth; the overload with
// x_value binds the symbol x.
LCNumber evaluate_lc(const Expr& expr, int depth);
LCNumber evaluate_lc(const Expr& expr, int depth, const LCNumber& x_value);

// Folds a constant subtree to an exact rational (PowerUndefined if a
// symbol or function call makes it non-constant). `what` names the
// context in error messages.
Rational fold_constant_rational(const Expr& expr, const char* what = "exponent");

// Parses option-style values as constant expressions: "1000000", "10^6",
// "1/3", "0.25" all fold to exact rationals.
Rational parse_rational(std::string_view text);

}  // namespace lexirank
