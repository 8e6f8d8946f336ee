#include "curvesym/algebraic_value.hpp"

#include "test_util.hpp"

#include "doctest.h"

using namespace curvesym;
using testutil::P;
using testutil::Q;

namespace {

RootPtr root_of(const Poly& p, int index) {
    auto roots = isolate_real_roots(p);
    return std::make_shared<RealAlgebraic>(roots.at(static_cast<size_t>(index)));
}

}  // namespace

TEST_CASE("norm polynomial of a simple value") {
    // alpha = sqrt(2); value = alpha has norm polynomial z^2 - 2 up to scale.
    Poly r = norm_polynomial(P("t^2-2"), Poly::x(), Poly::one());
    CHECK(squarefree_part(r) == P("t^2-2").monic());
    // value = alpha^2 = 2: norm polynomial has root 2 only.
    Poly r2 = norm_polynomial(P("t^2-2"), P("t^2"), Poly::one());
    CHECK(squarefree_part(r2) == P("t-2"));
}

TEST_CASE("arithmetic in one field") {
    RootPtr sqrt2 = root_of(P("t^2-2"), 1);  // positive root
    AlgValue a = AlgValue::of_root(sqrt2);
    AlgValue two = a * a;
    CHECK(two.is_rational());
    CHECK(two.rational() == 2);

    AlgValue inv = AlgValue(Rational(1)) / a;  // 1/sqrt(2) = sqrt(2)/2
    CHECK((inv * a).equals(AlgValue(Rational(1))));
    CHECK((a + (-a)).is_zero());
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);

    AlgValue half = AlgValue(Rational(1, 2));
    CHECK((a * half + a * half).equals(a));
}

TEST_CASE("cross-root equality via norm polynomials") {
    RootPtr a = root_of(P("t^2-2"), 1);                 // sqrt(2)
    RootPtr b = root_of(P("(t^2-2)*(t^2+4*t+2)"), 3);   // sqrt(2), the largest of the four roots
    RootPtr c = root_of(P("t^2-3"), 1);                 // sqrt(3)

    AlgValue va = AlgValue::of_root(a);
    AlgValue vb = AlgValue::of_root(b);
    AlgValue vc = AlgValue::of_root(c);
    CHECK(va.equals(vb));
    CHECK(!va.equals(vc));

    // (sqrt(2))^2/2 == 1 compared cross-field against the rational 1.
    AlgValue one = va * va / AlgValue(Rational(2));
    CHECK(one.equals(AlgValue(Rational(1))));

    // sqrt(2)*sqrt(2) equals 3 - 1 computed over sqrt(3)'s field.
    AlgValue three_minus_one = vc * vc - AlgValue(Rational(1));
    CHECK((va * va).equals(three_minus_one));
}

TEST_CASE("enclose refines to requested width") {
    RootPtr sqrt2 = root_of(P("t^2-2"), 1);
    AlgValue v = AlgValue(P("t+1"), P("t"), sqrt2);  // (sqrt2+1)/sqrt2
    Interval e = v.enclose(Q("1/100000000"));
    CHECK(e.width() <= Q("1/100000000"));
    // (sqrt2+1)/sqrt2 = 1 + 1/sqrt2 ~ 1.7071067
    CHECK(e.lo < Q("17072/10000"));
    CHECK(e.hi > Q("17071/10000"));
}

TEST_CASE("denominator vanishing is rejected") {
    RootPtr sqrt2 = root_of(P("t^2-2"), 1);
    CHECK_THROWS(AlgValue(Poly::one(), P("t^2-2"), sqrt2));
}

TEST_CASE("rational roots collapse to rationals") {
    RootPtr two = std::make_shared<RealAlgebraic>(RealAlgebraic::from_rational(Q("2")));
    AlgValue v = AlgValue(P("t^2+1"), P("t"), two);
    CHECK(v.is_rational());
    CHECK(v.rational() == Q("5/2"));
}
