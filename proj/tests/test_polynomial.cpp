#include "curvesym/polynomial.hpp"

#include "curvesym/interval.hpp"
#include "curvesym/real_algebraic.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <random>

using namespace curvesym;
using testutil::P;
using testutil::Q;

TEST_CASE("poly_gcd on shared linear factors") {
    CHECK(poly_gcd(P("t^2-1"), P("t-1")) == P("t-1"));
    CHECK(poly_gcd(P("(t-1)^2*(t+2)"), P("(t-1)*(t+3)")) == P("t-1"));
    CHECK(poly_gcd(P("4*t^2-4"), Poly::zero()) == P("t^2-1"));
    CHECK(poly_gcd(Poly::zero(), Poly::zero()) == Poly::zero());
}

TEST_CASE("poly_gcd divides both inputs and respects products") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int iter = 0; iter < 40; ++iter) {
        auto rand_poly = [&](int deg) {
            std::vector<Rational> c;
            for (int i = 0; i <= deg; ++i) c.emplace_back(coeff(rng));
            Poly p{std::vector<Rational>(c)};
            return p;
        };
        Poly a = rand_poly(4), b = rand_poly(3), common = rand_poly(2);
        if (a.is_zero() || b.is_zero() || common.is_zero()) continue;
        Poly p = a * common, q = b * common;
        Poly g = poly_gcd(p, q);
        CHECK(p.divmod(g).second.is_zero());
        CHECK(q.divmod(g).second.is_zero());
        // (p/g)*(q/g)*g^2 == p*q (monic normalization keeps this exact)
        CHECK(p.exact_div(g) * q.exact_div(g) * g * g == p * q);
    }
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(P("(t-1)^2*(t+2)")) == P("(t-1)*(t+2)"));
    CHECK(squarefree_part(P("t^2+1")) == P("t^2+1"));
    CHECK(squarefree_part(P("t*(t^2-6*t+6)")) == P("t*(t^2-6*t+6)"));
    CHECK_THROWS(squarefree_part(Poly::zero()));
}

TEST_CASE("sturm_count") {
    CHECK(sturm_count(P("t^2-2"), Interval(Q("0"), Q("2"))) == 1);
    CHECK(sturm_count(P("t^2-6*t+6"), Interval(Q("0"), Q("6"))) == 2);  // roots 3 +- sqrt(3)
    CHECK(sturm_count(P("t^2+1"), Interval(Q("-10"), Q("10"))) == 0);
}

TEST_CASE("sturm_count endpoint handling") {
    // Root exactly at an endpoint: half-open (lo, hi] semantics.
    CHECK(sturm_count(P("t^2-1"), Interval(Q("-1"), Q("1"))) == 1);
    CHECK(sturm_count(P("t*(t-1)"), Interval(Q("0"), Q("2"))) == 1);
    CHECK(sturm_count(P("t"), Interval::point(Q("0"))) == 1);
    CHECK(sturm_count(P("t-5"), Interval::point(Q("0"))) == 0);
}

TEST_CASE("square_decompose recognizes exact squares") {
    auto r1 = square_decompose(P("2*t^4+4*t^2+2"));
    REQUIRE(r1.has_value());
    CHECK(r1->first == Q("2"));
    CHECK(r1->second == P("t^2+1"));

    auto r2 = square_decompose(P("9*t^4+18*t^2+9"));
    REQUIRE(r2.has_value());
    CHECK(r2->first == Q("9"));
    CHECK(r2->second == P("t^2+1"));

    auto r3 = square_decompose(P("9*t^4+4*t^2+1"));
    CHECK(!r3.has_value());
    // Independent cross-check: a nonzero p is c*s^2 iff s = monic gcd(p, p')
    // satisfies p = lc(p)*s^2.
    Poly p = P("9*t^4+4*t^2+1");
    Poly s = poly_gcd(p, p.derivative());
    CHECK(p != s * s * p.leading());
}

TEST_CASE("square_decompose round-trip and odd-degree rejection") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Rational> c;
        int deg = 1 + iter % 4;
        for (int i = 0; i < deg; ++i) c.emplace_back(coeff(rng));
        c.emplace_back(1);
        Poly s{std::vector<Rational>(c)};
        Rational k(1 + iter % 7);
        Poly p = s * s * k;
        auto d = square_decompose(p);
        REQUIRE(d.has_value());
        CHECK(d->second * d->second * d->first == p);
        // A returned decomposition must always round-trip, perturbed or not.
        if (auto dp = square_decompose(p + Poly::one()))
            CHECK(dp->second * dp->second * dp->first == p + Poly::one());
        Poly odd = p * Poly::x();
        if (odd.leading() > 0) CHECK(!square_decompose(odd).has_value());
    }
}

TEST_CASE("content_gcd") {
    Poly p = P("t^2-6*t+6");
    Poly q = P("t^3+5");
    CHECK(content_gcd({p, p * q}) == p);
    CHECK(content_gcd({p, Poly::one(), q}) == Poly::one());
    CHECK_THROWS(content_gcd({Poly::zero(), Poly::zero()}));
}

TEST_CASE("resultant") {
    CHECK(resultant(P("t^2-2"), P("t-1")) == Q("-1"));
    // Res(p, q) = 0 iff common root.
    CHECK(resultant(P("t^2-1"), P("t-1")) == Q("0"));
    CHECK(resultant(P("2*t+1"), P("3*t-1")) == Q("-5"));
}

TEST_CASE("rendering") {
    CHECK(P("1-2*t+t^2").to_string() == "1 - 2*t + t^2");
    CHECK(Poly::zero().to_string() == "0");
    CHECK(P("-t^3").to_string() == "-t^3");
    CHECK(P("1/2*t").to_string() == "1/2*t");
}
