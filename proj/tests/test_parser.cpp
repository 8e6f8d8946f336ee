#include "curvesym/expr.hpp"

#include "test_util.hpp"

#include "doctest.h"

using namespace curvesym;
using testutil::P;
using testutil::Q;

TEST_CASE("precedence and exponent binding") {
    CHECK(parse_ratfun("2*t^3") == RatFun(P("2*t^3")));
    CHECK(parse_ratfun("-t^2") == RatFun(-P("t^2")));
    CHECK(parse_ratfun("1+2*3") == RatFun(Q("7")));
    CHECK(parse_ratfun("(1+2)*3") == RatFun(Q("9")));
    CHECK(parse_ratfun("22/7") == RatFun(Q("22/7")));
    CHECK(parse_ratfun("t^0") == RatFun(Q("1")));
}

TEST_CASE("rational functions reduce") {
    RatFun f = parse_ratfun("(t^2-1)/(t-1)");
    CHECK(f == RatFun(P("t+1")));
    RatFun g = parse_ratfun("1/(1+t^2)");
    CHECK(g.den() == P("1+t^2"));
}

TEST_CASE("errors carry byte offsets") {
    CHECK_THROWS_AS(parse_ratfun("1/(t-t)"), ParseError);
    CHECK_THROWS_AS(parse_ratfun("t^-1"), ParseError);
    CHECK_THROWS_AS(parse_ratfun("t + s"), ParseError);
    CHECK_THROWS_AS(parse_ratfun("1.5*t"), ParseError);
    CHECK_THROWS_AS(parse_ratfun("(t"), ParseError);
    CHECK_THROWS_AS(parse_ratfun(""), ParseError);
    try {
        parse_ratfun("t + s");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("component lists") {
    auto c = parse_component_list("(t^2, t^3, t^4)", 3);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == RatFun(P("t^2")));
    CHECK(c[2] == RatFun(P("t^4")));
    CHECK_THROWS_AS(parse_component_list("(t, t^2)", 3), ParseError);

    auto deltoid = parse_component_list(
        "((-t^4+4*t^3-12*t^2+16*t-4)/(t^4-4*t^3+8*t^2-8*t+4),"
        " (8*t^3-24*t^2+24*t-8)/(t^4-4*t^3+8*t^2-8*t+4))",
        2);
    REQUIRE(deltoid.size() == 2);
    CHECK(deltoid[0].den() == deltoid[1].den());
    CHECK(deltoid[0].den() == P("t^4-4*t^3+8*t^2-8*t+4"));
}

TEST_CASE("parse after print is the identity") {
    const char* samples[] = {
        "t",
        "(t^2-1)/(t-1)",
        "1/(1+t^2)",
        "-3/2*t^3 + t - 7",
        "(8*t^3-24*t^2+24*t-8)/(t^4-4*t^3+8*t^2-8*t+4)",
    };
    for (const char* s : samples) {
        RatFun f = parse_ratfun(s);
        CHECK(parse_ratfun(to_expression(f)) == f);
    }
}

TEST_CASE("alternate variable name") {
    CHECK(parse_ratfun("u^2+1", "u") == RatFun(P("t^2+1")));
    CHECK_THROWS_AS(parse_ratfun("t^2", "u"), ParseError);
}
