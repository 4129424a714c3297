#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnforge/errors.hpp"
#include "mnforge/series.hpp"

namespace mnforge {

// Abstract syntax for the expression language:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' ['-'] digits)?
//   atom   := digits ('/' digits)?            rational literal
//           | 's' digits                      sqrt(p_i)
//           | 'x' digits                      group generator
//           | 'e'                             group identity
//           | 'gamma' '(' digits ')'
//           | 'inv' '(' expr (',' digits)? ')'
//           | 'comm' '(' expr ',' expr (',' digits)? ')'
//           | '(' expr ')'
//
// Binary operators associate left; '^' binds tighter than unary minus.  The
// depth arguments of inv and comm default to the configured inversion depth
// when omitted.
struct Expr {
    enum class Kind {
        Number,
        Radical,
        Generator,
        Identity,
        Gamma,
        Neg,
        Add,
        Sub,
        Mul,
        Pow,
        Inv,
        Comm
    };

    Kind kind = Kind::Identity;
    Rational number;                      // Number
    std::uint32_t index = 0;              // Radical / Generator index, Gamma length
    Int exponent;                         // Pow
    std::optional<std::uint32_t> depth;   // Inv / Comm
    std::vector<Expr> children;
};

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, End };
    Kind kind;
    std::string text;
    std::size_t offset;
};

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '^': k = Token::Kind::Caret; break;
            case '/': k = Token::Kind::Slash; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case ',': k = Token::Kind::Comma; break;
            default: throw ParseError(start, "a valid token");
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Expr parse() {
        Expr e = parse_expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }

    const Token& advance() { return toks_[pos_++]; }

    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }

    const Token& expect(Token::Kind k, const char* what) {
        if (peek().kind != k) throw ParseError(peek().offset, what);
        return toks_[pos_++];
    }

    std::uint32_t expect_positive_int(const char* what) {
        const Token& t = expect(Token::Kind::Number, what);
        Int v = parse_integer(t.text);
        if (v <= 0 || v > 1000000) throw ParseError(t.offset, what);
        return static_cast<std::uint32_t>(v);
    }

    Expr parse_expr() {
        Expr lhs = parse_term();
        for (;;) {
            if (accept(Token::Kind::Plus)) {
                Expr node;
                node.kind = Expr::Kind::Add;
                node.children.push_back(std::move(lhs));
                node.children.push_back(parse_term());
                lhs = std::move(node);
            } else if (accept(Token::Kind::Minus)) {
                Expr node;
                node.kind = Expr::Kind::Sub;
                node.children.push_back(std::move(lhs));
                node.children.push_back(parse_term());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    Expr parse_term() {
        Expr lhs = parse_factor();
        while (accept(Token::Kind::Star)) {
            Expr node;
            node.kind = Expr::Kind::Mul;
            node.children.push_back(std::move(lhs));
            node.children.push_back(parse_factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr parse_factor() {
        if (accept(Token::Kind::Minus)) {
            Expr node;
            node.kind = Expr::Kind::Neg;
            node.children.push_back(parse_factor());
            return node;
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (!accept(Token::Kind::Caret)) return base;
        bool neg = accept(Token::Kind::Minus);
        const Token& t = expect(Token::Kind::Number, "an integer exponent");
        Expr node;
        node.kind = Expr::Kind::Pow;
        node.exponent = parse_integer(t.text);
        if (neg) node.exponent = -node.exponent;
        node.children.push_back(std::move(base));
        return node;
    }

    Expr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                advance();
                Expr node;
                node.kind = Expr::Kind::Number;
                Int num = parse_integer(t.text);
                if (accept(Token::Kind::Slash)) {
                    const Token& d = expect(Token::Kind::Number, "a denominator");
                    Int den = parse_integer(d.text);
                    if (den == 0) throw ParseError(d.offset, "a nonzero denominator");
                    node.number = Rational(num) / Rational(den);
                } else {
                    node.number = Rational(num);
                }
                return node;
            }
            case Token::Kind::Ident: return parse_ident();
            case Token::Kind::LParen: {
                advance();
                Expr inner = parse_expr();
                expect(Token::Kind::RParen, "a closing parenthesis");
                return inner;
            }
            default: throw ParseError(t.offset, "a value");
        }
    }

    Expr parse_ident() {
        const Token& t = advance();
        const std::string& s = t.text;
        if (s == "e") {
            Expr node;
            node.kind = Expr::Kind::Identity;
            return node;
        }
        if (s == "gamma") {
            expect(Token::Kind::LParen, "an opening parenthesis");
            Expr node;
            node.kind = Expr::Kind::Gamma;
            node.index = expect_positive_int("a positive truncation length");
            expect(Token::Kind::RParen, "a closing parenthesis");
            return node;
        }
        if (s == "inv") {
            expect(Token::Kind::LParen, "an opening parenthesis");
            Expr node;
            node.kind = Expr::Kind::Inv;
            node.children.push_back(parse_expr());
            if (accept(Token::Kind::Comma)) node.depth = expect_positive_int("a positive depth");
            expect(Token::Kind::RParen, "a closing parenthesis");
            return node;
        }
        if (s == "comm") {
            expect(Token::Kind::LParen, "an opening parenthesis");
            Expr node;
            node.kind = Expr::Kind::Comm;
            node.children.push_back(parse_expr());
            expect(Token::Kind::Comma, "a comma");
            node.children.push_back(parse_expr());
            if (accept(Token::Kind::Comma)) node.depth = expect_positive_int("a positive depth");
            expect(Token::Kind::RParen, "a closing parenthesis");
            return node;
        }
        if (s.size() > 1 && (s[0] == 's' || s[0] == 'x')) {
            bool digits = true;
            for (std::size_t i = 1; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
            if (digits) {
                Int v = parse_integer(s.substr(1));
                if (v <= 0 || v > 1000000) throw ParseError(t.offset, "a positive index");
                Expr node;
                node.kind = s[0] == 's' ? Expr::Kind::Radical : Expr::Kind::Generator;
                node.index = static_cast<std::uint32_t>(v);
                return node;
            }
        }
        throw ParseError(t.offset, "a known symbol");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view src) { return detail::Parser(src).parse(); }

struct EvalConfig {
    PrimeTable tab;
    std::uint32_t default_depth = 8;
    std::uint32_t max_pow = 4096;
};

inline Series eval(const EvalConfig& cfg, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return Series(FieldElem(e.number));
        case Expr::Kind::Radical: return Series(FieldElem::radical(e.index));
        case Expr::Kind::Generator: return Series::from_word(GroupWord::generator(e.index));
        case Expr::Kind::Identity: return Series::from_word(GroupWord{});
        case Expr::Kind::Gamma: return gamma_series(e.index);
        case Expr::Kind::Neg: return -eval(cfg, e.children[0]);
        case Expr::Kind::Add: return eval(cfg, e.children[0]) + eval(cfg, e.children[1]);
        case Expr::Kind::Sub: return eval(cfg, e.children[0]) - eval(cfg, e.children[1]);
        case Expr::Kind::Mul:
            return mul(cfg.tab, eval(cfg, e.children[0]), eval(cfg, e.children[1]));
        case Expr::Kind::Pow: {
            Series base = eval(cfg, e.children[0]);
            Int n = e.exponent;
            if (n == 0) return Series(1);
            bool negative = n < 0;
            Int mag = negative ? Int(-n) : n;
            if (mag > cfg.max_pow) throw BadArguments("exponent magnitude too large");
            if (negative) {
                if (!base.is_monomial())
                    throw NeedsDepth(
                        "negative power of a non-monomial needs inv(expr, depth)");
                base = inverse(cfg.tab, base, 1);
            }
            return pow(cfg.tab, base, static_cast<std::uint32_t>(mag));
        }
        case Expr::Kind::Inv:
            return inverse(cfg.tab, eval(cfg, e.children[0]),
                           e.depth.value_or(cfg.default_depth));
        case Expr::Kind::Comm:
            return commutator(cfg.tab, eval(cfg, e.children[0]), eval(cfg, e.children[1]),
                              e.depth.value_or(cfg.default_depth));
    }
    throw BadArguments("malformed expression tree");
}

inline Series eval_text(const EvalConfig& cfg, std::string_view src) {
    return eval(cfg, parse(src));
}

// Parse text that must denote a bare group word ("e", "x1^-1*x3^2", ...).
inline GroupWord parse_word(std::string_view src) {
    EvalConfig cfg;  // word evaluation touches neither primes nor depth
    Series s = eval_text(cfg, src);
    if (!s.is_monomial() || !s.coeff(s.min_word()).is_one())
        throw BadArguments("expected a group word");
    return s.min_word();
}

}  // namespace mnforge
