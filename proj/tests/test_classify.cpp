#include "curvesym/classify.hpp"

#include "curvesym/expr.hpp"
#include "test_util.hpp"

#include "doctest.h"

using namespace curvesym;
using testutil::P;
using testutil::Q;

namespace {

CurveSpec make_curve(int dim, const std::string& text) {
    return CurveSpec(dim, parse_component_list(text, static_cast<size_t>(dim)));
}

const char* kDeltoid =
    "((-t^4+4*t^3-12*t^2+16*t-4)/(t^4-4*t^3+8*t^2-8*t+4),"
    " (8*t^3-24*t^2+24*t-8)/(t^4-4*t^3+8*t^2-8*t+4))";

bool value_is(const AlgValue& v, const Rational& r) { return v.equals(AlgValue(r)); }

}  // namespace

TEST_CASE("twisted cubic axial symmetry classifies with the y-axis fixed") {
    CurveSpec tc = make_curve(3, "(t, t^2, t^3)");
    DetectOptions opt;
    opt.reparam_override = MoebiusQ{Q("0"), Q("1"), Q("1"), Q("1")};
    DetectionResult res = detect_all(tc, opt);
    REQUIRE(res.symmetries.size() == 1);
    SymmetryElement e = classify(res.symmetries[0], res.working.degree_bound());
    CHECK(e.kind == SymKind::axial_symmetry);
    REQUIRE(e.fixed.has_value());
    CHECK(e.fixed->kind == FixedElement::Kind::line);
    // Axis {x = z = 0}: point at the origin, direction along y.
    for (const AlgValue& c : e.fixed->point) CHECK(c.is_zero());
    CHECK(e.fixed->direction[0].is_zero());
    CHECK(value_is(e.fixed->direction[1], Q("1")));
    CHECK(e.fixed->direction[2].is_zero());
    // Axial symmetry is the rotation by pi: cos = -1, sin = 0, order 2.
    REQUIRE(e.angle.has_value());
    CHECK(value_is(e.angle->cos_theta, Q("-1")));
    CHECK(e.angle->sin_sign == 0);
    CHECK(e.order == 2);
}

TEST_CASE("deltoid rotations: angles 2pi/3 and 4pi/3 about the origin") {
    CurveSpec d = make_curve(2, kDeltoid);
    DetectionResult res = detect_all(d);
    int rotations = 0, mirrors = 0;
    Rational tol = Q("1/1000000000");
    for (const VerifiedSymmetry& s : res.symmetries) {
        SymmetryElement e = classify(s, res.working.degree_bound());
        if (e.kind == SymKind::rotation_2d) {
            ++rotations;
            REQUIRE(e.fixed.has_value());
            CHECK(e.fixed->kind == FixedElement::Kind::point);
            CHECK(e.fixed->point[0].is_zero());
            CHECK(e.fixed->point[1].is_zero());
            REQUIRE(e.angle.has_value());
            CHECK(e.order == 3);
            // cos(2pi/3) = -1/2 within 1e-9.
            Interval ci = e.angle->cos_interval(tol);
            CHECK(abs_q(ci.mid() - Q("-1/2")) < Q("1/100000000"));
            Interval si = e.angle->sin_interval(tol);
            // sin = +-sqrt(3)/2 ~ +-0.8660254
            CHECK(abs_q(abs_q(si.mid()) - Q("866025404/1000000000")) < Q("1/1000000"));
            // cos^2 + sin^2 = 1 exactly on representatives.
            REQUIRE(e.angle->sin_exact.has_value());
            AlgValue one = e.angle->cos_theta * e.angle->cos_theta +
                           *e.angle->sin_exact * *e.angle->sin_exact;
            CHECK(one.equals(AlgValue(Q("1"))));
        }
        if (e.kind == SymKind::mirror_line) {
            ++mirrors;
            CHECK(e.fixed->kind == FixedElement::Kind::line);
            CHECK(e.order == 2);
        }
    }
    CHECK(rotations == 2);
    CHECK(mirrors == 3);
}

TEST_CASE("parabola mirror fixes the line x = 0") {
    CurveSpec par = make_curve(2, "(t, t^2)");
    DetectionResult res = detect_all(par);
    REQUIRE(res.symmetries.size() == 1);
    SymmetryElement e = classify(res.symmetries[0], 2);
    CHECK(e.kind == SymKind::mirror_line);
    REQUIRE(e.fixed.has_value());
    CHECK(e.fixed->kind == FixedElement::Kind::line);
    CHECK(e.fixed->point[0].is_zero());
    // Direction along y (the axis x = 0), oriented positively.
    CHECK(e.fixed->direction[0].is_zero());
    CHECK(value_is(e.fixed->direction[1], Q("1")));
}

TEST_CASE("hand-built kinds: central inversion and mirror plane") {
    // diag(-1,-1,-1) with t = 0 via a synthetic certificate is awkward to
    // fabricate; use curves that genuinely produce them instead.
    // Central inversion: (t^7, t^3 + t, t^5 + t^3) has exactly one.
    CurveSpec inv1 = make_curve(3, "(t^7, t^3 + t, t^5 + t^3)");
    DetectOptions opt;
    opt.reparam_override = MoebiusQ{Q("1"), Q("-2"), Q("1"), Q("1")};  // (t-2)/(t+1)
    DetectionResult res = detect_all(inv1, opt);
    bool found_inversion = false;
    for (const VerifiedSymmetry& s : res.symmetries) {
        SymmetryElement e = classify(s, res.working.degree_bound());
        if (e.kind == SymKind::central_inversion) {
            found_inversion = true;
            CHECK(e.fixed->kind == FixedElement::Kind::point);
            for (const AlgValue& c : e.fixed->point) CHECK(c.is_zero());
        }
    }
    CHECK(found_inversion);
}

TEST_CASE("dedupe collapses duplicates and orders deterministically") {
    CurveSpec d = make_curve(2, kDeltoid);
    DetectionResult res = detect_all(d);
    std::vector<SymmetryElement> elems;
    for (const VerifiedSymmetry& s : res.symmetries)
        elems.push_back(classify(s, res.working.degree_bound()));
    // Duplicate every element; dedupe must restore the original count.
    std::vector<SymmetryElement> doubled = elems;
    for (const SymmetryElement& e : elems) doubled.push_back(e);
    auto unique1 = dedupe(doubled);
    CHECK(unique1.size() == 5);
    auto unique2 = dedupe(unique1);
    REQUIRE(unique1.size() == unique2.size());
    for (size_t i = 0; i < unique1.size(); ++i)
        CHECK(unique1[i].kind == unique2[i].kind);
}

TEST_CASE("group closure") {
    // Twisted cubic: {axial} closes to {id, axial}.
    CurveSpec tc = make_curve(3, "(t, t^2, t^3)");
    DetectOptions opt;
    opt.reparam_override = MoebiusQ{Q("0"), Q("1"), Q("1"), Q("1")};
    DetectionResult res = detect_all(tc, opt);
    GroupClosure g = group_closure(res.symmetries, res.working);
    CHECK(g.order == 2);
    CHECK(!g.grew_beyond_input);

    // Deltoid: two rotations and three mirrors close into the dihedral group
    // of order 6; the rotations alone close into the cyclic group of order 3.
    CurveSpec d = make_curve(2, kDeltoid);
    DetectionResult rd = detect_all(d);
    GroupClosure gd = group_closure(rd.symmetries, rd.working);
    CHECK(gd.order == 6);
    CHECK(!gd.grew_beyond_input);

    std::vector<VerifiedSymmetry> rotations_only;
    for (const VerifiedSymmetry& s : rd.symmetries)
        if (!is_involution(s)) rotations_only.push_back(s);
    REQUIRE(rotations_only.size() == 2);
    GroupClosure gz = group_closure(rotations_only, rd.working);
    CHECK(gz.order == 3);

    // Order of each rotation divides the group order.
    for (const VerifiedSymmetry& s : rd.symmetries) {
        SymmetryElement e = classify(s, rd.working.degree_bound());
        if (e.order) CHECK(gd.order % static_cast<size_t>(*e.order) == 0);
    }
}
