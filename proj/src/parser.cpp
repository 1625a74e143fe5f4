#include "lexirank/parser.hpp"

#include <charconv>
#include <utility>
#include <vector>

namespace lexirank {

namespace {

enum class TokenKind {
    number,
    identifier,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    end
};

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const auto push = [&](TokenKind kind, std::string value, std::size_t pos) {
        tokens.push_back({kind, std::move(value), pos});
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        // Typographic aliases sometimes pasted from formatted text.
        const std::string_view rest = text.substr(i);
        if (rest.starts_with("−")) {  // minus sign
            push(TokenKind::minus, "-", i);
            i += std::string_view("−").size();
            continue;
        }
        if (rest.starts_with("×")) {  // multiplication sign
            push(TokenKind::star, "*", i);
            i += std::string_view("×").size();
            continue;
        }
        if (rest.starts_with("÷")) {  // division sign
            push(TokenKind::slash, "/", i);
            i += std::string_view("÷").size();
            continue;
        }
        switch (c) {
            case '+': push(TokenKind::plus, "+", i); ++i; continue;
            case '-': push(TokenKind::minus, "-", i); ++i; continue;
            case '*': push(TokenKind::star, "*", i); ++i; continue;
            case '/': push(TokenKind::slash, "/", i); ++i; continue;
            case '^': push(TokenKind::caret, "^", i); ++i; continue;
            case '(': push(TokenKind::lparen, "(", i); ++i; continue;
            case ')': push(TokenKind::rparen, ")", i); ++i; continue;
            default: break;
        }
        if (is_digit(c)) {
            const std::size_t start = i;
            while (i < text.size() && is_digit(text[i])) ++i;
            if (i < text.size() && text[i] == '.') {
                if (i + 1 >= text.size() || !is_digit(text[i + 1])) {
                    throw ParseError("malformed number at position " +
                                         std::to_string(start) +
                                         ": expected digits after '.'",
                                     i);
                }
                ++i;
                while (i < text.size() && is_digit(text[i])) ++i;
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
                if (j >= text.size() || !is_digit(text[j])) {
                    throw ParseError("malformed number at position " +
                                         std::to_string(start) +
                                         ": expected digits in the exponent",
                                     i);
                }
                i = j;
                while (i < text.size() && is_digit(text[i])) ++i;
            }
            push(TokenKind::number, std::string(text.substr(start, i - start)),
                 start);
            continue;
        }
        if (is_alpha(c)) {
            const std::size_t start = i;
            while (i < text.size() && (is_alpha(text[i]) || is_digit(text[i]))) {
                ++i;
            }
            push(TokenKind::identifier,
                 std::string(text.substr(start, i - start)), start);
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) +
                             "' at position " + std::to_string(i),
                         i);
    }
    push(TokenKind::end, "", text.size());
    return tokens;
}

// Exact rational denoted by a decimal literal: digits[.digits][e[+-]digits].
Rational literal_rational(const std::string& text) {
    const std::size_t e_pos = text.find_first_of("eE");
    const std::string mantissa =
        e_pos == std::string::npos ? text : text.substr(0, e_pos);
    long exponent10 = 0;
    if (e_pos != std::string::npos) {
        const std::string exp_text = text.substr(e_pos + 1);
        const char* begin = exp_text.data();
        const char* finish = begin + exp_text.size();
        if (begin != finish && *begin == '+') ++begin;
        const auto [ptr, ec] = std::from_chars(begin, finish, exponent10);
        if (ec != std::errc() || ptr != finish) {
            throw DomainError("numeric literal exponent out of range: " + text);
        }
    }
    constexpr long kMaxLiteralExponent = 1'000'000;
    if (exponent10 > kMaxLiteralExponent || exponent10 < -kMaxLiteralExponent) {
        throw DomainError("numeric literal exponent out of range: " + text);
    }
    std::string digits = mantissa;
    const std::size_t dot = digits.find('.');
    if (dot != std::string::npos) {
        const long fraction_digits = static_cast<long>(digits.size() - dot - 1);
        digits.erase(dot, 1);
        exponent10 -= fraction_digits;
    }
    const Rational base{Integer(digits, 10)};
    return base * Rational(10).pow(exponent10);
}

// The same literal as a correctly rounded binary64.
double literal_double(const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw DomainError("numeric literal exceeds binary64 range: " + text);
    }
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed number: " + text, 0);
    }
    return value;
}

bool contains_symbol(const Expr& expr, char name) {
    if (const auto* symbol = std::get_if<SymbolNode>(&expr.node)) {
        return symbol->name == name;
    }
    if (const auto* negate = std::get_if<NegateNode>(&expr.node)) {
        return contains_symbol(*negate->operand, name);
    }
    if (const auto* binary = std::get_if<BinaryNode>(&expr.node)) {
        return contains_symbol(*binary->lhs, name) ||
               contains_symbol(*binary->rhs, name);
    }
    if (const auto* call = std::get_if<CallNode>(&expr.node)) {
        return contains_symbol(*call->argument, name);
    }
    return false;
}

class ExpressionParser {
public:
    ExpressionParser(std::vector<Token> tokens, Dialect dialect, bool allow_x)
        : tokens_(std::move(tokens)), dialect_(dialect), allow_x_(allow_x) {}

    ExprPtr run() {
        ExprPtr expr = parse_sum();
        if (peek().kind != TokenKind::end) {
            throw ParseError("unexpected trailing input at position " +
                                 std::to_string(peek().position),
                             peek().position);
        }
        return expr;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    ExprPtr make(std::size_t position,
                 std::variant<LiteralNode, SymbolNode, NegateNode, BinaryNode,
                              CallNode>
                     node) {
        auto expr = std::make_unique<Expr>();
        expr->node = std::move(node);
        expr->position = position;
        return expr;
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        while (peek().kind == TokenKind::plus ||
               peek().kind == TokenKind::minus) {
            const Token op = advance();
            ExprPtr rhs = parse_term();
            lhs = make(op.position,
                       BinaryNode{op.kind == TokenKind::plus ? '+' : '-',
                                  std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        while (peek().kind == TokenKind::star ||
               peek().kind == TokenKind::slash) {
            const Token op = advance();
            ExprPtr rhs = parse_unary();
            lhs = make(op.position,
                       BinaryNode{op.kind == TokenKind::star ? '*' : '/',
                                  std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (peek().kind == TokenKind::minus) {
            const Token op = advance();
            ExprPtr operand = parse_unary();
            return make(op.position, NegateNode{std::move(operand)});
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (peek().kind == TokenKind::caret) {
            const Token op = advance();
            // The exponent is a unary-expression, so G^-1 works and
            // G^2^3 nests to the right.
            ExprPtr exponent = parse_unary();
            if (dialect_ == Dialect::gross && contains_symbol(*exponent, 'G')) {
                throw HeightUnsupported(
                    "'G' occurs inside an exponent (height >= 2): no "
                    "comparison algorithm is known for such numerals. For "
                    "example G^(G^-1) has a positive exponent yet is not "
                    "infinite; it would have to be infinitely close to 1, "
                    "which no height-1 criterion can certify.");
            }
            base = make(op.position,
                        BinaryNode{'^', std::move(base), std::move(exponent)});
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token& token = peek();
        switch (token.kind) {
            case TokenKind::number: {
                const Token literal = advance();
                return make(literal.position,
                            LiteralNode{literal_rational(literal.text),
                                        literal.text});
            }
            case TokenKind::identifier:
                return parse_identifier();
            case TokenKind::lparen: {
                advance();
                ExprPtr inner = parse_sum();
                if (peek().kind != TokenKind::rparen) {
                    throw ParseError("expected ')' at position " +
                                         std::to_string(peek().position),
                                     peek().position);
                }
                advance();
                return inner;
            }
            default:
                throw ParseError("expected a value at position " +
                                     std::to_string(token.position),
                                 token.position);
        }
    }

    ExprPtr parse_identifier() {
        const Token token = advance();
        const std::string& name = token.text;
        if (name == "sin" || name == "cos" || name == "exp") {
            if (dialect_ == Dialect::gross) {
                static const char* const kSpelled[] = {"sine", "cosine",
                                                       "exponential"};
                const int which = name == "sin" ? 0 : name == "cos" ? 1 : 2;
                throw TransferUnavailable(
                    std::string("the ") + kSpelled[which] +
                    " of a grossnumeral is undefined: the calculus provides "
                    "no transfer principle for elementary functions");
            }
            if (peek().kind != TokenKind::lparen) {
                throw ParseError("expected '(' after '" + name +
                                     "' at position " +
                                     std::to_string(peek().position),
                                 peek().position);
            }
            advance();
            ExprPtr argument = parse_sum();
            if (peek().kind != TokenKind::rparen) {
                throw ParseError("expected ')' at position " +
                                     std::to_string(peek().position),
                                 peek().position);
            }
            advance();
            const Builtin function = name == "sin"   ? Builtin::sin
                                     : name == "cos" ? Builtin::cos
                                                     : Builtin::exp;
            return make(token.position, CallNode{function, std::move(argument)});
        }
        if (dialect_ == Dialect::gross && name == "G") {
            return make(token.position, SymbolNode{'G'});
        }
        if (dialect_ == Dialect::lc && name == "d") {
            return make(token.position, SymbolNode{'d'});
        }
        if (dialect_ == Dialect::lc && allow_x_ && name == "x") {
            return make(token.position, SymbolNode{'x'});
        }
        throw UnknownSymbol("unknown symbol '" + name + "' at position " +
                                std::to_string(token.position),
                            token.position);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    Dialect dialect_;
    bool allow_x_;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, Dialect dialect, bool allow_x) {
    if (dialect == Dialect::word) {
        throw DomainError("the word dialect has no expression grammar; "
                          "use parse_word");
    }
    return ExpressionParser(tokenize(text), dialect, allow_x).run();
}

MedalWord parse_word(std::string_view text) {
    std::vector<MedalWord::Letter> letters;
    std::size_t i = 0;
    const auto skip_spaces = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_spaces();
    if (i == text.size()) {
        return MedalWord();  // empty word
    }
    while (true) {
        skip_spaces();
        const std::size_t start = i;
        while (i < text.size() && is_digit(text[i])) ++i;
        if (i == start) {
            throw ParseError("expected a nonnegative integer at position " +
                                 std::to_string(start),
                             start);
        }
        MedalWord::Letter value = 0;
        const auto [ptr, ec] =
            std::from_chars(text.data() + start, text.data() + i, value);
        if (ec == std::errc::result_out_of_range) {
            throw DomainError("medal count out of range: " +
                              std::string(text.substr(start, i - start)));
        }
        letters.push_back(value);
        skip_spaces();
        if (i == text.size()) {
            break;
        }
        if (text[i] != ',') {
            throw ParseError("expected ',' at position " + std::to_string(i), i);
        }
        ++i;
    }
    return MedalWord(std::move(letters));
}

Grossnumeral evaluate_gross(const Expr& expr) {
    if (const auto* literal = std::get_if<LiteralNode>(&expr.node)) {
        return Grossnumeral(literal->value);
    }
    if (std::get_if<SymbolNode>(&expr.node) != nullptr) {
        return Grossnumeral::unit();  // only G survives gross parsing
    }
    if (const auto* negate = std::get_if<NegateNode>(&expr.node)) {
        return -evaluate_gross(*negate->operand);
    }
    if (const auto* binary = std::get_if<BinaryNode>(&expr.node)) {
        switch (binary->op) {
            case '+':
                return evaluate_gross(*binary->lhs) +
                       evaluate_gross(*binary->rhs);
            case '-':
                return evaluate_gross(*binary->lhs) -
                       evaluate_gross(*binary->rhs);
            case '*':
                return evaluate_gross(*binary->lhs) *
                       evaluate_gross(*binary->rhs);
            case '/': {
                const Grossnumeral divisor = evaluate_gross(*binary->rhs);
                if (!divisor.is_constant()) {
                    throw DomainError(
                        "division by a non-constant grossnumeral leaves the "
                        "height-1 ring");
                }
                if (divisor.is_zero()) {
                    throw DivisionByZero("division by zero");
                }
                const Rational inverse =
                    Rational(1) / divisor.leading_coefficient();
                return evaluate_gross(*binary->lhs) * Grossnumeral(inverse);
            }
            case '^': {
                const Rational q = fold_constant_rational(*binary->rhs);
                return pow(evaluate_gross(*binary->lhs), q);
            }
            default:
                break;
        }
    }
    // Calls are rejected at parse time in this dialect.
    throw TransferUnavailable(
        "elementary functions of grossnumerals are undefined");
}

namespace {

LCNumber evaluate_lc_impl(const Expr& expr, int depth, const LCNumber* bound_x) {
    if (const auto* literal = std::get_if<LiteralNode>(&expr.node)) {
        return LCNumber::constant(literal_double(literal->text), depth);
    }
    if (const auto* symbol = std::get_if<SymbolNode>(&expr.node)) {
        if (symbol->name == 'd') {
            return LCNumber::infinitesimal(depth);
        }
        if (bound_x == nullptr) {
            throw DomainError("the symbol x is not bound in this context");
        }
        return *bound_x;
    }
    if (const auto* negate = std::get_if<NegateNode>(&expr.node)) {
        return -evaluate_lc_impl(*negate->operand, depth, bound_x);
    }
    if (const auto* binary = std::get_if<BinaryNode>(&expr.node)) {
        switch (binary->op) {
            case '+':
                return evaluate_lc_impl(*binary->lhs, depth, bound_x) +
                       evaluate_lc_impl(*binary->rhs, depth, bound_x);
            case '-':
                return evaluate_lc_impl(*binary->lhs, depth, bound_x) -
                       evaluate_lc_impl(*binary->rhs, depth, bound_x);
            case '*':
                return evaluate_lc_impl(*binary->lhs, depth, bound_x) *
                       evaluate_lc_impl(*binary->rhs, depth, bound_x);
            case '/':
                return evaluate_lc_impl(*binary->lhs, depth, bound_x) *
                       invert(evaluate_lc_impl(*binary->rhs, depth, bound_x));
            case '^': {
                const Rational q = fold_constant_rational(*binary->rhs);
                return pow(evaluate_lc_impl(*binary->lhs, depth, bound_x), q);
            }
            default:
                break;
        }
    }
    const auto& call = std::get<CallNode>(expr.node);
    const LCNumber argument = evaluate_lc_impl(*call.argument, depth, bound_x);
    switch (call.function) {
        case Builtin::sin: return sin(argument);
        case Builtin::cos: return cos(argument);
        case Builtin::exp: return exp(argument);
    }
    throw DomainError("unhandled builtin");
}

}  // namespace

LCNumber evaluate_lc(const Expr& expr, int depth) {
    return evaluate_lc_impl(expr, depth, nullptr);
}

LCNumber evaluate_lc(const Expr& expr, int depth, const LCNumber& x_value) {
    return evaluate_lc_impl(expr, depth, &x_value);
}

Rational fold_constant_rational(const Expr& expr, const char* what) {
    if (const auto* literal = std::get_if<LiteralNode>(&expr.node)) {
        return literal->value;
    }
    if (const auto* symbol = std::get_if<SymbolNode>(&expr.node)) {
        throw PowerUndefined(std::string(what) +
                             " must be an exact rational constant, but it "
                             "contains the symbol '" +
                             std::string(1, symbol->name) + "'");
    }
    if (const auto* negate = std::get_if<NegateNode>(&expr.node)) {
        return -fold_constant_rational(*negate->operand, what);
    }
    if (const auto* binary = std::get_if<BinaryNode>(&expr.node)) {
        const Rational lhs = fold_constant_rational(*binary->lhs, what);
        const Rational rhs = fold_constant_rational(*binary->rhs, what);
        switch (binary->op) {
            case '+': return lhs + rhs;
            case '-': return lhs - rhs;
            case '*': return lhs * rhs;
            case '/': return lhs / rhs;  // DivisionByZero propagates
            case '^': return rational_pow(lhs, rhs);
            default: break;
        }
    }
    throw PowerUndefined(std::string(what) +
                         " must be an exact rational constant, but it "
                         "contains a function call");
}

Rational parse_rational(std::string_view text) {
    const ExprPtr expr = parse_expression(text, Dialect::lc, false);
    return fold_constant_rational(*expr, "value");
}

}  // namespace lexirank
