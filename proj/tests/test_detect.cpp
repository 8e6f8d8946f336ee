#include "curvesym/detect.hpp"

#include "curvesym/expr.hpp"
#include "test_util.hpp"

#include "doctest.h"

using namespace curvesym;
using testutil::P;
using testutil::Q;

namespace {

CurveSpec make_curve(int dim, const std::string& text, const std::string& var = "t") {
    return CurveSpec(dim, parse_component_list(text, static_cast<size_t>(dim), var));
}

RatFun RF(const std::string& text) { return parse_ratfun(text, "b"); }

const char* kDeltoid =
    "((-t^4+4*t^3-12*t^2+16*t-4)/(t^4-4*t^3+8*t^2-8*t+4),"
    " (8*t^3-24*t^2+24*t-8)/(t^4-4*t^3+8*t^2-8*t+4))";

CurveSpec twisted_cubic_reparam() {
    // (u, u^2, u^3) with u = 1/(t+1).
    CurveSpec tc = make_curve(3, "(t, t^2, t^3)");
    return tc.reparam(MoebiusQ{Q("0"), Q("1"), Q("1"), Q("1")});
}

}  // namespace

TEST_CASE("involution family of the reparametrized twisted cubic") {
    CurveSpec c = twisted_cubic_reparam();
    ParamFamily fam = derive_involution_family(c);
    CHECK(fam.c_of_b ==
          RF("(b+2)*(25*b^4+89*b^3+228*b^2+262*b+350) / (14*(b^4+2*b^3+6*b^2+b+14))"));
    CHECK(fam.delta_of_b ==
          RF("-(b+1)*(25*b+14)*(b^4+4*b^3+10*b^2+12*b+14) / (14*(b^4+2*b^3+6*b^2+b+14))"));
    CHECK(fam.a_of_b == RF("-1"));
}

TEST_CASE("involution family of the parabola") {
    CurveSpec par = make_curve(2, "(t, t^2)");
    ParamFamily fam = derive_involution_family(par);
    CHECK(fam.c_of_b == RF("-2*b/(6*b^2+1)"));
    CHECK(fam.a_of_b == RF("-1"));    // a + d = 0 with d = 1
    CHECK(fam.delta_of_b == RF("-1") - RF("b") * fam.c_of_b);
}

TEST_CASE("plane rotation family of the deltoid") {
    CurveSpec d = make_curve(2, kDeltoid);
    ParamFamily fam = derive_plane_rotation_family(d);
    CHECK(fam.delta_of_b == RF("1/2*b^2 - b + 1"));
    CHECK(fam.a_of_b == RF("(7*b^4-34*b^3+30*b^2+8*b-8)/(4*(1-b)*(b^2-2*b-2))"));
    CHECK(fam.c_of_b == RF("b*(2*b^3-3*b^2-18*b+22)/(4*(b^2-2*b-2)*(1-b))"));
}

TEST_CASE("plane rotation family of the parabola") {
    CurveSpec par = make_curve(2, "(t, t^2)");
    ParamFamily fam = derive_plane_rotation_family(par);
    CHECK(fam.delta_of_b == RF("1+4*b^2"));
    CHECK(fam.c_of_b == RF("2*b"));
    CHECK(fam.a_of_b == RF("1+6*b^2"));
}

TEST_CASE("PH rotation family of the PH cubic") {
    CurveSpec ph = make_curve(3, "(t^3/3 - t, t^2, t^3/3 + t)");
    auto data = ph_sigma(ph);
    REQUIRE(data.has_value());
    ParamFamily plus = derive_ph_rotation_family(ph, *data, 1);
    CHECK(plus.delta_of_b == RF("1/(b^2+1)"));
    CHECK(plus.c_of_b == RF("b/(b^2+1)^2"));
    ParamFamily minus = derive_ph_rotation_family(ph, *data, -1);
    CHECK(minus.delta_of_b == -plus.delta_of_b);
}

TEST_CASE("curvature prefilter") {
    CurveSpec par = make_curve(2, "(t, t^2)");
    Poly k = curvature_prefilter(par);
    CHECK(k.eval(Q("0")) == 0);
    auto roots = isolate_real_roots(k);
    REQUIRE(roots.size() == 1);  // (1+4b^2)^3 = 1 forces b = 0
    CHECK(*roots[0].exact_rational() == 0);

    CurveSpec d = make_curve(2, kDeltoid);
    Poly kd = curvature_prefilter(d);
    CHECK(kd.eval(Q("0")) == 0);
}

TEST_CASE("deltoid isometry family matches the printed rotation angle") {
    CurveSpec d = make_curve(2, kDeltoid);
    ParamFamily fam = derive_plane_rotation_family(d);
    IsometryFamily iso = build_isometry_family(d, fam);
    RatFun e_re = RF("-((b-1)*(b^2-2*b-2)/(b^2-2*b+2)^2)*(b-2)");
    RatFun e_im = RF("-((b-1)*(b^2-2*b-2)/(b^2-2*b+2)^2)*b");
    CHECK(iso.Q[0][0] == e_re);
    CHECK(iso.Q[1][1] == e_re);
    CHECK(iso.Q[1][0] == e_im);
    CHECK(iso.Q[0][1] == -e_im);
}

TEST_CASE("deltoid rotation candidates reproduce the printed P(b)") {
    CurveSpec d = make_curve(2, kDeltoid);
    ParamFamily fam = derive_plane_rotation_family(d);
    IsometryFamily iso = build_isometry_family(d, fam);
    Poly prefilter = squarefree_part(curvature_prefilter(d));
    CandidateSet cands = candidate_polynomial(d, fam, iso, prefilter);
    CHECK(cands.raw_content == P("b*(b-1)*(b^2-2*b-2)*(b^2-6*b+6)", "b").monic());
    CHECK(cands.P == P("b*(b^2-6*b+6)", "b").monic());
    // The prefilter condition must contain every candidate root.
    CHECK(poly_gcd(cands.P, prefilter) == cands.P);

    auto found = solve_candidates(d, fam, iso, cands);
    REQUIRE(cands.roots.size() == 3);  // b = 0 and 3 -+ sqrt(3)
    CHECK(found.size() == 2);          // b = 0 is the trivial rotation
    for (const auto& s : found) {
        CHECK(s.branch == Branch::plane_rotation_d1);
        CHECK(!s.b_star->is_rational());
        // Rotation centre is the origin: (Q - I) z0 = -t with t = 0.
        CHECK(s.t[0].is_zero());
        CHECK(s.t[1].is_zero());
    }
}

TEST_CASE("twisted cubic involution branches reproduce the printed gcds") {
    CurveSpec c = twisted_cubic_reparam();

    ParamFamily direct = derive_involution_family(c, 1);
    IsometryFamily iso_d = build_isometry_family(c, direct);
    Poly prefilter = squarefree_part(curvature_prefilter(c));
    CandidateSet cd = candidate_polynomial(c, direct, iso_d, prefilter);
    CHECK(cd.raw_content ==
          P("(b+2)*(25*b+14)*(b^4+4*b^3+10*b^2+12*b+14)", "b").monic());
    CHECK(cd.P == P("b+2", "b"));
    auto found = solve_candidates(c, direct, iso_d, cd);
    REQUIRE(found.size() == 1);
    const VerifiedSymmetry& s = found[0];
    CHECK(s.b_star->is_rational());
    CHECK(*s.b_star->exact_rational() == Q("-2"));
    // Q = diag(-1, 1, -1), t = 0.
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Rational expected = i == j ? (i == 1 ? Q("1") : Q("-1")) : Q("0");
            CHECK(s.Q[i][j].equals(AlgValue(expected)));
        }
    for (const auto& v : s.t) CHECK(v.is_zero());
    // phi(t) = -t - 2.
    CHECK(s.phi.a.equals(AlgValue(Q("-1"))));
    CHECK(s.phi.b.equals(AlgValue(Q("-2"))));
    CHECK(s.phi.c.is_zero());
    CHECK(is_involution(s));

    ParamFamily opp = derive_involution_family(c, -1);
    IsometryFamily iso_o = build_isometry_family(c, opp);
    CandidateSet co = candidate_polynomial(c, opp, iso_o, prefilter);
    CHECK(co.raw_content == P("(25*b+14)*(b^4+4*b^3+10*b^2+12*b+14)", "b").monic());
    CHECK(co.P == Poly::one());
    CHECK(solve_candidates(c, opp, iso_o, co).empty());
}

TEST_CASE("parabola involution finds the mirror") {
    CurveSpec par = make_curve(2, "(t, t^2)");
    ParamFamily fam = derive_involution_family(par);
    IsometryFamily iso = build_isometry_family(par, fam);
    Poly prefilter = squarefree_part(curvature_prefilter(par));
    CandidateSet cands = candidate_polynomial(par, fam, iso, prefilter);
    auto found = solve_candidates(par, fam, iso, cands);
    REQUIRE(found.size() == 1);
    const VerifiedSymmetry& s = found[0];
    CHECK(*s.b_star->exact_rational() == 0);
    CHECK(s.Q[0][0].equals(AlgValue(Q("-1"))));
    CHECK(s.Q[1][1].equals(AlgValue(Q("1"))));
    CHECK(s.Q[0][1].is_zero());
    CHECK(s.t[0].is_zero());
    CHECK(s.t[1].is_zero());
    // phi(t) = -t.
    CHECK(s.phi.a.equals(AlgValue(Q("-1"))));
    CHECK(s.phi.b.is_zero());
    CHECK(s.phi.c.is_zero());
}

TEST_CASE("detect_all on the deltoid") {
    CurveSpec d = make_curve(2, kDeltoid);
    DetectionResult res = detect_all(d);
    CHECK(res.reparam.is_identity());
    CHECK(res.properness == Properness::proper);
    CHECK(res.rotations_complete);

    int rotations = 0, involutions = 0;
    for (const BranchRun& run : res.branches) {
        if (run.branch == Branch::plane_rotation_d1) rotations += static_cast<int>(run.found.size());
        if (run.branch == Branch::involution_d1) involutions += static_cast<int>(run.found.size());
        if (run.branch == Branch::d0) CHECK(run.found.empty());
    }
    CHECK(rotations == 2);
    CHECK(involutions == 3);
    CHECK(res.symmetries.size() == 5);
}

TEST_CASE("detect_all on the twisted cubic") {
    CurveSpec tc = make_curve(3, "(t, t^2, t^3)");
    DetectOptions opt;
    opt.reparam_override = MoebiusQ{Q("0"), Q("1"), Q("1"), Q("1")};
    DetectionResult res = detect_all(tc, opt);
    CHECK(!res.is_ph);
    CHECK(!res.rotations_complete);
    CHECK(res.symmetries.size() == 1);
    CHECK(is_involution(res.symmetries[0]));
    for (const BranchRun& run : res.branches)
        if (run.branch == Branch::d0) CHECK(run.found.empty());
}

TEST_CASE("detect_all on the PH cubic") {
    CurveSpec ph = make_curve(3, "(t^3/3 - t, t^2, t^3/3 + t)");
    DetectionResult res = detect_all(ph);
    CHECK(res.is_ph);
    CHECK(res.rotations_complete);
    CHECK(!res.symmetries.empty());
}
