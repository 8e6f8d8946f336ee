#include "curvesym/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace curvesym {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

Int floor_q(const Rational& r) { return floor_div(num(r), den(r)); }
Int ceil_q(const Rational& r) { return ceil_div(num(r), den(r)); }

std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // Split off p/q form first.
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto lhs = parse_rational(text.substr(0, slash));
        auto rhs = parse_rational(text.substr(slash + 1));
        if (!lhs || !rhs || *rhs == 0) return std::nullopt;
        return *lhs / *rhs;
    }
    bool negative = false;
    size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    Int mantissa = 0;
    long frac_digits = 0, exponent = 0;
    bool any_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            any_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && any_digit) {
            try {
                exponent = std::stol(std::string(text.substr(i + 1)));
            } catch (...) {
                return std::nullopt;
            }
            i = text.size() - 1;
        } else {
            return std::nullopt;
        }
    }
    if (!any_digit) return std::nullopt;
    Rational value(mantissa);
    long e = exponent - frac_digits;
    Int p10 = 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) p10 *= 10;
    if (e >= 0)
        value *= Rational(p10);
    else
        value /= Rational(p10);
    return negative ? Rational(-value) : value;
}

std::string decimal_string(const Rational& r, int digits) {
    Int n = num(r), d = den(r);
    std::string out;
    if (n < 0) {
        out += '-';
        n = -n;
    }
    Int ip = n / d;
    Int rem = n % d;
    out += ip.str();
    if (digits <= 0) return out;
    out += '.';
    for (int k = 0; k < digits; ++k) {
        rem *= 10;
        Int digit = rem / d;
        rem %= d;
        out += static_cast<char>('0' + static_cast<int>(digit));
    }
    return out;
}

Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_in: empty interval");
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_in(-hi, -lo);
    // Now 0 < lo <= hi. Walk the continued-fraction expansion, accumulating
    // the frame x -> (p*x + q)/(r*x + s) so the answer comes out reduced.
    Rational a = lo, b = hi;
    Int p = 1, q = 0, r = 0, s = 1;
    while (true) {
        Int c = ceil_q(a);
        if (Rational(c) <= b) return make_rational(p * c + q, r * c + s);
        Int f = floor_q(a);  // no integer in [a, b], so floor(a) == floor(b)
        Int np = p * f + q;
        q = p;
        p = np;
        Int nr = r * f + s;
        s = r;
        r = nr;
        // x = f + 1/y maps [a, b] to y in [1/(b - f), 1/(a - f)].
        Rational a2 = Rational(1) / (b - Rational(f));
        Rational b2 = Rational(1) / (a - Rational(f));
        a = a2;
        b = b2;
    }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace curvesym
