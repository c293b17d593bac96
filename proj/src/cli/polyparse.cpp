#include "cli/polyparse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace cli {

using exactalg::PolyScalar;
using exactalg::Rational;

namespace {

struct Token {
    enum Kind { integer, ident, op, end } kind = end;
    std::string text;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::integer, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < text.size() &&
                   std::isalnum(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({Token::ident, text.substr(i, j - i)});
            i = j;
            continue;
        }
        if (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '^' || ch == '(' ||
            ch == ')') {
            out.push_back({Token::op, std::string(1, ch)});
            ++i;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, ch) + "'");
    }
    out.push_back({Token::end, ""});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, int nvars)
        : toks_(std::move(tokens)), nvars_(nvars) {}

    PolyScalar parse() {
        PolyScalar p = expr();
        if (!at_end()) throw ParseError("unexpected token '" + peek().text + "'");
        return p;
    }

  private:
    std::vector<Token> toks_;
    int nvars_ = 0;
    size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Token::end; }
    bool is_op(const char* s) const { return peek().kind == Token::op && peek().text == s; }
    Token take() { return toks_[pos_++]; }

    PolyScalar expr() {
        PolyScalar p = term();
        while (is_op("+") || is_op("-")) {
            const bool plus = take().text == "+";
            const PolyScalar q = term();
            p = plus ? p + q : p - q;
        }
        return p;
    }

    PolyScalar term() {
        PolyScalar p = unary();
        while (is_op("*") || is_op("/")) {
            const bool mul = take().text == "*";
            const PolyScalar q = unary();
            if (mul) {
                p = p * q;
            } else {
                if (!q.is_constant()) throw ParseError("division by a non-constant polynomial");
                const Rational d = q.constant_value();
                if (d == 0) throw ParseError("division by zero");
                p = p.scale(Rational(1) / d);
            }
        }
        return p;
    }

    PolyScalar unary() {
        if (is_op("-")) {
            take();
            return -unary();
        }
        return power();
    }

    PolyScalar power() {
        PolyScalar base = atom();
        if (!is_op("^")) return base;
        take();
        if (peek().kind != Token::integer) {
            const std::string got = at_end() ? "end of input" : "'" + peek().text + "'";
            throw ParseError("exponent must be a nonnegative integer, got " + got);
        }
        const std::string digits = take().text;
        if (digits.size() > 4) throw ParseError("exponent " + digits + " is too large");
        const int e = std::stoi(digits);
        PolyScalar out = PolyScalar::constant(nvars_, Rational(1));
        for (int s = 0; s < e; ++s) out = out * base;
        return out;
    }

    PolyScalar atom() {
        if (at_end()) throw ParseError("unexpected end of input");
        if (peek().kind == Token::integer) return PolyScalar::constant(nvars_, Rational(take().text));
        if (peek().kind == Token::ident) return variable(take().text);
        if (is_op("(")) {
            take();
            PolyScalar p = expr();
            if (!is_op(")")) throw ParseError("expected ')'");
            take();
            return p;
        }
        throw ParseError("unexpected token '" + peek().text + "'");
    }

    PolyScalar variable(const std::string& name) const {
        bool xform = name.size() >= 2 && name[0] == 'x';
        for (size_t i = 1; xform && i < name.size(); ++i)
            xform = std::isdigit(static_cast<unsigned char>(name[i])) != 0;
        if (!xform) throw ParseError("unexpected identifier '" + name + "'");
        long idx = 0;
        try {
            idx = std::stol(name.substr(1));
        } catch (const std::exception&) {
            idx = 0;
        }
        if (idx < 1 || idx > nvars_) {
            const std::string range =
                nvars_ > 0 ? "coordinates are x1..x" + std::to_string(nvars_)
                           : "the chart has no coordinates";
            throw ParseError("unknown variable '" + name + "' (" + range + ")");
        }
        return PolyScalar::variable(nvars_, static_cast<int>(idx));
    }
};

}  // namespace

PolyScalar parse_poly(const std::string& text, int nvars) {
    Parser parser(lex(text), nvars);
    return parser.parse();
}

std::string poly_to_string(const PolyScalar& p) { return p.to_string(); }

}  // namespace cli
