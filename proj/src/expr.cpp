#include "curvesym/expr.hpp"

#include <cctype>

namespace curvesym {

namespace {

struct Parser {
    std::string_view text;
    std::string_view var;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        Int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw ParseError("expected integer", pos);
        if (pos < text.size() && text[pos] == '.')
            throw ParseError("decimal literals are not supported; use fractions", pos);
        return value;
    }

    RatFun atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RatFun e = expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string_view name = text.substr(start, pos - start);
            if (name == var) return RatFun::variable();
            throw ParseError("unknown symbol '" + std::string(name) + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    RatFun power() {
        RatFun base = atom();
        while (peek() == '^') {
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '-')
                throw ParseError("negative exponent", pos);
            Int e = integer();
            if (e > 512) throw ParseError("exponent too large", pos);
            RatFun acc(Rational(1));
            RatFun b = base;
            unsigned long n = e.convert_to<unsigned long>();
            while (n > 0) {
                if (n & 1) acc = acc * b;
                b = b * b;
                n >>= 1;
            }
            base = acc;
        }
        return base;
    }

    RatFun unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFun term() {
        RatFun acc = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * unary();
            } else if (c == '/') {
                size_t at = pos;
                ++pos;
                RatFun rhs = unary();
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                acc = acc / rhs;
            } else {
                break;
            }
        }
        return acc;
    }

    RatFun expr() {
        RatFun acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + term();
            } else if (c == '-') {
                ++pos;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

RatFun parse_ratfun(std::string_view text, std::string_view var) {
    Parser p{text, var};
    RatFun out = p.expr();
    if (!p.at_end()) throw ParseError("trailing input", p.pos);
    return out;
}

std::vector<RatFun> parse_component_list(std::string_view text, size_t expected,
                                         std::string_view var) {
    Parser p{text, var};
    p.expect('(', "'('");
    std::vector<RatFun> out;
    out.push_back(p.expr());
    while (p.accept(',')) out.push_back(p.expr());
    p.expect(')', "')'");
    if (!p.at_end()) throw ParseError("trailing input", p.pos);
    if (expected != 0 && out.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " components, got " +
                             std::to_string(out.size()),
                         0);
    return out;
}

std::string to_expression(const RatFun& f, const std::string& var) {
    if (f.is_polynomial()) return f.num().to_string(var);
    return "(" + f.num().to_string(var) + ")/(" + f.den().to_string(var) + ")";
}

}  // namespace curvesym
