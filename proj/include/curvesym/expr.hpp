#pragma once

#include "curvesym/rational_function.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curvesym {

/// Parse failure with the byte offset of the offending character.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
    size_t offset;
};

/// Parses an arithmetic expression over integer literals and one variable
/// into an exact rational function. Operators + - * / ^ with standard
/// precedence, ^ binds tightest with nonnegative integer exponents.
RatFun parse_ratfun(std::string_view text, std::string_view var = "t");

/// Parses "(e1, e2[, e3])" into one rational function per component.
/// `expected` = 0 accepts any count >= 1.
std::vector<RatFun> parse_component_list(std::string_view text, size_t expected,
                                         std::string_view var = "t");

/// Renders f so that parse_ratfun(to_expression(f)) == f.
std::string to_expression(const RatFun& f, const std::string& var = "t");

}  // namespace curvesym
