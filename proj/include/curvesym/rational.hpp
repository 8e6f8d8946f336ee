#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace curvesym {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline Rational make_rational(const Int& n, const Int& d) {
    // mpq canonicalizes (reduces and fixes sign) on construction.
    return Rational(n, d);
}

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int floor_q(const Rational& r);
Int ceil_q(const Rational& r);

/// Renders "p/q", or just "p" when q = 1.
std::string to_string(const Rational& r);

/// Parses "p", "p/q", or a decimal literal like "-1.25e-3" into an exact rational.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact decimal expansion of r, truncated toward zero to `digits` fractional
/// digits ("-1.2679491924" style). Pure integer long division; no floating point.
std::string decimal_string(const Rational& r, int digits);

/// The unique rational with smallest denominator in the closed interval
/// [lo, hi] (ties broken by smallest numerator magnitude). Stern-Brocot walk.
Rational simplest_in(const Rational& lo, const Rational& hi);

double to_double(const Rational& r);

}  // namespace curvesym
