#include "curvesym/real_algebraic.hpp"

#include "test_util.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace curvesym;
using testutil::P;
using testutil::Q;

namespace {

/// Independent bisection oracle: midpoint of [lo, hi] after shrinking to the
/// requested width using plain sign evaluation. Used to freeze digit strings.
Rational bisect_oracle(const Poly& p, Rational lo, Rational hi, const Rational& width) {
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (p.eval(lo) * p.eval(mid) <= 0)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("isolate_real_roots basic") {
    auto roots = isolate_real_roots(P("t*(t^2-6*t+6)"));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].is_rational());
    CHECK(*roots[0].exact_rational() == 0);
    CHECK(!roots[1].is_rational());
    CHECK(!roots[2].is_rational());
    // ascending: 0 < 3-sqrt(3) < 3+sqrt(3)
    CHECK(roots[1].isolating().lo > 0);
    CHECK(roots[2].isolating().lo > roots[1].isolating().hi);

    CHECK(isolate_real_roots(P("t^2+1")).empty());

    auto cubed = isolate_real_roots(P("(t-1)^3"));
    REQUIRE(cubed.size() == 1);
    CHECK(cubed[0].is_rational());
    CHECK(*cubed[0].exact_rational() == 1);
    CHECK(cubed[0].defining() == P("t-1"));

    CHECK_THROWS(isolate_real_roots(Poly::zero()));
}

TEST_CASE("refine_root narrows onto 3 - sqrt(3)") {
    RealAlgebraic alpha(P("t^2-6*t+6"), Interval(Q("1"), Q("2")));
    Rational w = Q("1/10000000000");  // 1e-10
    RealAlgebraic refined = refine_root(alpha, w);
    CHECK(refined.isolating().width() <= w);
    Rational oracle = bisect_oracle(P("t^2-6*t+6"), Q("1"), Q("2"), Q("1/1000000000000"));
    CHECK(decimal_string(oracle, 10).substr(0, 12) == "1.2679491924");
    bool close = abs_q(refined.isolating().mid() - oracle) < Q("1/1000000000");
    CHECK(close);

    // Idempotence.
    RealAlgebraic twice = refine_root(refined, w);
    CHECK(twice.isolating().lo == refined.isolating().lo);
    CHECK(twice.isolating().hi == refined.isolating().hi);

    // Exact rational roots collapse to a point.
    RealAlgebraic r5 = RealAlgebraic::from_rational(Q("5"));
    CHECK(refine_root(r5, w).isolating().is_point());
}

TEST_CASE("refine_root keeps the sign change") {
    RealAlgebraic alpha(P("t^2-6*t+6"), Interval(Q("1"), Q("2")));
    RealAlgebraic refined = refine_root(alpha, Q("1/1000000"));
    const Poly& d = refined.defining();
    CHECK(d.sign_at_rational(refined.isolating().lo) *
              d.sign_at_rational(refined.isolating().hi) <
          0);
}

TEST_CASE("sign_at and vanishes_at") {
    RealAlgebraic alpha(P("t^2-6*t+6"), Interval(Q("1"), Q("2")));  // 3 - sqrt(3)
    CHECK(sign_at(P("t-1"), alpha) == 1);
    CHECK(sign_at(P("t^2-6*t+6"), alpha) == 0);
    CHECK(sign_at(Poly(Rational(-1)), alpha) == -1);

    CHECK(vanishes_at(P("t^2-6*t+6"), alpha));
    CHECK(!vanishes_at(P("t-1"), alpha));
    CHECK(vanishes_at(P("(t^2-6*t+6)*(t+5)"), alpha));
}

TEST_CASE("vanishes_at agrees with sign_at == 0 on random pairs") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coeff(-8, 8);
    auto roots = isolate_real_roots(P("(t^2-2)*(t^2-6*t+6)*(t-1)*(t+3)*t"));
    REQUIRE(roots.size() == 7);
    int checked = 0;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Rational> c;
        int deg = iter % 5;
        for (int i = 0; i <= deg; ++i) c.emplace_back(coeff(rng));
        Poly g{std::vector<Rational>(c)};
        const RealAlgebraic& alpha = roots[iter % roots.size()];
        Poly probe = (iter % 3 == 0) ? g * alpha.defining() : g;
        CHECK(vanishes_at(probe, alpha) == (sign_at(probe, alpha) == 0));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("random products of distinct linear factors isolate exactly") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> numer(-30, 30);
    std::uniform_int_distribution<int> denom(1, 30);
    std::uniform_int_distribution<int> kdist(1, 6);
    for (int iter = 0; iter < 50; ++iter) {
        int k = kdist(rng);
        std::vector<Rational> expected;
        while (static_cast<int>(expected.size()) < k) {
            Rational r = make_rational(numer(rng), denom(rng));
            if (std::find(expected.begin(), expected.end(), r) == expected.end())
                expected.push_back(r);
        }
        Poly p = Poly::one();
        for (const Rational& r : expected) p = p * Poly{-num(r), Int(den(r))};
        std::sort(expected.begin(), expected.end());
        auto roots = isolate_real_roots(p);
        REQUIRE(roots.size() == expected.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            REQUIRE(roots[i].is_rational());
            CHECK(*roots[i].exact_rational() == expected[i]);
        }
    }
}

TEST_CASE("every produced root passes the Sturm certificate") {
    auto roots = isolate_real_roots(P("(t^2-2)*(t^3-3)*(t-1/2)"));
    for (const auto& alpha : roots)
        CHECK(sturm_count(alpha.defining(), alpha.isolating()) == 1);
}

TEST_CASE("same_number across different defining polynomials") {
    auto a = isolate_real_roots(P("t^2-6*t+6"));
    auto b = isolate_real_roots(P("(t^2-6*t+6)*(t+5)"));
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 3);
    CHECK(same_number(a[0], b[1]));  // both 3 - sqrt(3)
    CHECK(same_number(a[1], b[2]));
    CHECK(!same_number(a[0], a[1]));
    CHECK(!same_number(a[0], b[0]));
    CHECK(same_number(RealAlgebraic::from_rational(Q("2")), RealAlgebraic::from_rational(Q("2"))));
    CHECK(!same_number(RealAlgebraic::from_rational(Q("2")), a[0]));
}

TEST_CASE("compare_to_rational") {
    auto a = isolate_real_roots(P("t^2-6*t+6"));
    CHECK(compare_to_rational(a[0], Q("1")) == 1);
    CHECK(compare_to_rational(a[0], Q("2")) == -1);
    CHECK(compare_to_rational(RealAlgebraic::from_rational(Q("3")), Q("3")) == 0);
}
