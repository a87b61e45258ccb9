#include "holoweb/parser.hpp"

#include <algorithm>
#include <cctype>

namespace holoweb {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) return {Token::End, "", start};
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            return {Token::Number, std::string(src_.substr(start, i_ - start)), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            return {Token::Ident, std::string(src_.substr(start, i_ - start)), start};
        }
        ++i_;
        switch (c) {
        case '+': return {Token::Plus, "+", start};
        case '-': return {Token::Minus, "-", start};
        case '*': return {Token::Star, "*", start};
        case '/': return {Token::Slash, "/", start};
        case '^': return {Token::Caret, "^", start};
        case '(': return {Token::LParen, "(", start};
        case ')': return {Token::RParen, ")", start};
        default: throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    std::string_view src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& vars) : lex_(src), vars_(vars) {
        cur_ = lex_.next();
    }

    RationalFunction parse() {
        RationalFunction r = expr();
        if (cur_.kind != Token::End) throw parse_error("unexpected trailing input", cur_.pos);
        return r;
    }

private:
    Lexer lex_;
    Token cur_;
    const std::vector<std::string>& vars_;

    void advance() { cur_ = lex_.next(); }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            advance();
            RationalFunction rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        while (cur_.kind == Token::Star || cur_.kind == Token::Slash) {
            bool div = cur_.kind == Token::Slash;
            std::size_t at = cur_.pos;
            advance();
            RationalFunction rhs = factor();
            if (div && rhs.is_zero()) throw parse_error("division by zero", at);
            acc = div ? acc / rhs : acc * rhs;
        }
        return acc;
    }

    RationalFunction factor() {
        if (cur_.kind == Token::Minus) {
            advance();
            return -factor();
        }
        if (cur_.kind == Token::Plus) {
            advance();
            return factor();
        }
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (cur_.kind != Token::Caret) return base;
        advance();
        if (cur_.kind != Token::Number)
            throw parse_error("exponent must be a nonnegative integer literal", cur_.pos);
        unsigned long e = std::stoul(cur_.text);
        advance();
        return base.pow(static_cast<int>(e));
    }

    RationalFunction atom() {
        switch (cur_.kind) {
        case Token::Number: {
            mpz_class n(cur_.text);
            advance();
            return RationalFunction::constant(GaussianRational(mpq_class(n)));
        }
        case Token::Ident: {
            std::string name = cur_.text;
            std::size_t at = cur_.pos;
            advance();
            if (name == "i") return RationalFunction::constant(GaussianRational::imaginary_unit());
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
                std::string allowed;
                for (const auto& v : vars_) allowed += (allowed.empty() ? "" : ", ") + v;
                throw parse_error("unknown variable '" + name + "' (expected one of: " +
                                      (allowed.empty() ? "<none>" : allowed) + ")",
                                  at);
            }
            return RationalFunction::variable(name);
        }
        case Token::LParen: {
            advance();
            RationalFunction inner = expr();
            if (cur_.kind != Token::RParen) throw parse_error("expected ')'", cur_.pos);
            advance();
            return inner;
        }
        default:
            throw parse_error("expected a number, variable, or '('", cur_.pos);
        }
    }
};

} // namespace

RationalFunction parse_ratfunc(std::string_view text, const std::vector<std::string>& vars) {
    for (const auto& v : vars)
        if (v == "i") throw std::logic_error("'i' is reserved for the imaginary unit");
    return Parser(text, vars).parse();
}

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    RationalFunction r = parse_ratfunc(text, vars);
    if (!r.is_polynomial())
        throw parse_error("expression is not a polynomial (denominator " + r.den().str() + ")", 0);
    // Anchor the alphabet so callers can rely on the declared variable list.
    return r.as_poly().with_vars(vars);
}

GaussianRational parse_gaussian(std::string_view text) {
    RationalFunction r = parse_ratfunc(text, {});
    MultiPoly p = r.as_poly();
    if (!p.is_constant()) throw parse_error("expected a constant", 0);
    return p.constant_value();
}

} // namespace holoweb
