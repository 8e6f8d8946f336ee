#include "curvesym/curve.hpp"

#include "curvesym/expr.hpp"
#include "test_util.hpp"

#include "doctest.h"

#include <random>

using namespace curvesym;
using testutil::P;
using testutil::Q;

namespace {

CurveSpec make_curve(int dim, const std::string& text, const std::string& var = "t") {
    return CurveSpec(dim, parse_component_list(text, static_cast<size_t>(dim), var));
}

const char* kDeltoid =
    "((-t^4+4*t^3-12*t^2+16*t-4)/(t^4-4*t^3+8*t^2-8*t+4),"
    " (8*t^3-24*t^2+24*t-8)/(t^4-4*t^3+8*t^2-8*t+4))";

}  // namespace

TEST_CASE("hodograph of the twisted cubic") {
    CurveSpec c = make_curve(3, "(t, t^2, t^3)");
    HodographData h = hodograph(c);
    CHECK(h.d1[0] == RatFun(Poly::one()));
    CHECK(h.d1[1] == RatFun(P("2*t")));
    CHECK(h.d1[2] == RatFun(P("3*t^2")));
    CHECK(h.d2[1] == RatFun(Q("2")));
    CHECK(h.norm1sq == RatFun(P("1+4*t^2+9*t^4")));
    // kappa^2 * |x'|^6... identity kappa_sq*norm1sq^3 = cross12sq
    CHECK(h.kappa_sq * h.norm1sq * h.norm1sq * h.norm1sq == h.cross12sq);
    CHECK(h.cross12sq.eval(Q("0")).value() == 4);
    CHECK(h.norm1sq.eval(Q("0")).value() == 1);
}

TEST_CASE("curvature classifies lines and circles") {
    CHECK(curvature_sq(make_curve(2, "(t, 2*t+1)")).is_zero());
    CurveSpec circle = make_curve(2, "((1-t^2)/(1+t^2), 2*t/(1+t^2))");
    CHECK(curvature_sq(circle) == RatFun(Q("1")));

    CHECK(is_degenerate(make_curve(2, "(t, 3*t-1)")) == Degeneracy::line);
    CHECK(is_degenerate(circle) == Degeneracy::circle);
    CHECK(is_degenerate(make_curve(3, "(t, t^2, t^3)")) == Degeneracy::ok);

    // A great circle of the unit sphere in the tilted plane x = z.
    CurveSpec circ3 = make_curve(3, "(-2*t/(2+t^2), (2-t^2)/(2+t^2), -2*t/(2+t^2))");
    CHECK(is_degenerate(circ3) == Degeneracy::circle);
    // Same point set squashed onto x = 2z is an ellipse, not a circle.
    CurveSpec ell3 = make_curve(3, "(-2*t/(2+t^2), (2-t^2)/(2+t^2), -t/(2+t^2))");
    CHECK(is_degenerate(ell3) == Degeneracy::ok);
}

TEST_CASE("general position: deltoid is already fine") {
    CurveSpec deltoid = make_curve(2, kDeltoid);
    CHECK(!general_position_failure(deltoid).has_value());
    auto [u, c] = general_position_reparam(deltoid);
    CHECK(u.is_identity());
}

TEST_CASE("general position: twisted cubic needs a non-affine map") {
    CurveSpec tc = make_curve(3, "(t, t^2, t^3)");
    CHECK(general_position_failure(tc).has_value());
    auto [u, c] = general_position_reparam(tc);
    CHECK(!u.is_affine());
    CHECK(!general_position_failure(c).has_value());

    // Point set preserved: c(t) = x(u(t)) for 50 random rational t.
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> numer(-50, 50);
    std::uniform_int_distribution<int> denom(1, 9);
    int checked = 0;
    while (checked < 50) {
        Rational t = make_rational(numer(rng), denom(rng));
        auto ut = u.eval(t);
        if (!ut) continue;
        auto lhs = c.eval(t);
        auto rhs = tc.eval(*ut);
        if (!lhs || !rhs) continue;
        CHECK(*lhs == *rhs);
        ++checked;
    }
}

TEST_CASE("properness heuristic") {
    CHECK(properness_check(make_curve(2, "(t^2, t^4)")) == Properness::improper);
    CHECK(properness_check(make_curve(2, "(t, t^2)")) == Properness::proper);
    CHECK(properness_check(make_curve(3, "(t, t^2, t^3)")) == Properness::proper);
}

TEST_CASE("ph_sigma recognizes the PH cubic") {
    CurveSpec ph = make_curve(3, "(t^3/3 - t, t^2, t^3/3 + t)");
    auto data = ph_sigma(ph);
    REQUIRE(data.has_value());
    CHECK(data->c == Q("2"));
    CHECK(data->s_num == P("t^2+1"));
    CHECK(data->s_den == Poly::one());

    CHECK(!ph_sigma(make_curve(3, "(t, t^2, t^3)")).has_value());
    // Odd-degree reduced numerator of |x'|^2 can never be a square.
    CHECK(!ph_sigma(make_curve(3, "(t^2/2, t, t)")).has_value());

    // Round-trip: c*(s_num/s_den)^2 == |x'|^2.
    HodographData h = hodograph(ph);
    RatFun sig(data->s_num, data->s_den);
    CHECK(sig * sig * data->c == h.norm1sq);
}

TEST_CASE("compose_component matches the cleared-pair contract") {
    // x(t) = t with phi = (a t + b)/(c t + 1) stays the pair (N, D).
    BPoly n = BPoly::outer(P("t"), Poly::x()) + BPoly::of_b(P("t^2"));  // a(b)=b, b-coeff=b^2
    BPoly d = BPoly::outer(P("1+t"), Poly::x()) + BPoly::of_b(Poly::one());
    auto [cn, cd] = compose_component(RatFun::variable(), n, d);
    CHECK(cn == n);
    CHECK(cd == d);

    auto [sn, sd] = compose_component(RatFun(P("t^2")), n, d);
    CHECK(sn == n * n);
    CHECK(sd == d * d);

    // x(t) = 1/t with concrete phi(t) = -t - 2.
    BPoly an = BPoly::of_t(P("-t-2"));
    BPoly ad = BPoly::of_t(Poly::one());
    auto [rn, rd] = compose_component(RatFun(Poly::one(), Poly::x()), an, ad);
    CHECK(rn == BPoly::of_t(Poly::one()));
    CHECK(rd == BPoly::of_t(P("-t-2")));
}

TEST_CASE("moebius order over exact coefficients") {
    AlgValue one{Rational(1)}, zero{Rational(0)};
    MoebiusAlg ident{one, zero, zero, one};
    CHECK(moebius_order(ident, 5) == 1);

    MoebiusAlg neg_shift{AlgValue(Rational(-1)), AlgValue(Rational(-2)), zero, one};
    CHECK(moebius_order(neg_shift, 5) == 2);  // phi(t) = -t - 2

    MoebiusAlg shift{one, one, zero, one};  // t + 1: no finite order
    CHECK(!moebius_order(shift, 8).has_value());
}

TEST_CASE("moebius rendering") {
    MoebiusQ phi{Q("-1"), Q("-2"), Q("0"), Q("1")};
    CHECK(phi.to_string() == "(-t - 2)/1");
    MoebiusQ u{Q("2"), Q("-1"), Q("1"), Q("2")};
    CHECK(u.to_string() == "(2*t - 1)/(t + 2)");
    MoebiusQ inv = phi.compose(phi);
    CHECK(inv.is_identity());
}

TEST_CASE("reparametrization invariants") {
    CurveSpec deltoid = make_curve(2, kDeltoid);
    MoebiusQ u{Q("1"), Q("1"), Q("0"), Q("1")};
    CurveSpec shifted = deltoid.reparam(u);
    HodographData h = hodograph(shifted);
    CHECK(h.kappa_sq * h.norm1sq * h.norm1sq * h.norm1sq == h.cross12sq);
    CHECK(shifted.eval(Q("0")) == deltoid.eval(Q("1")));
}
