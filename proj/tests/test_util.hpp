#pragma once

#include "curvesym/expr.hpp"
#include "curvesym/polynomial.hpp"
#include "curvesym/rational.hpp"
#include "curvesym/rational_function.hpp"

#include <stdexcept>
#include <string>

namespace testutil {

/// Parses a polynomial from expression text (variable t or the given one).
inline curvesym::Poly P(const std::string& s, const std::string& var = "t") {
    curvesym::RatFun f = curvesym::parse_ratfun(s, var);
    if (!f.is_polynomial()) throw std::runtime_error("P(): not a polynomial: " + s);
    return f.num();
}

inline curvesym::Rational Q(const std::string& s) {
    auto r = curvesym::parse_rational(s);
    if (!r) throw std::runtime_error("Q(): bad rational: " + s);
    return *r;
}

}  // namespace testutil
