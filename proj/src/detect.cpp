#include "curvesym/detect.hpp"

#include <algorithm>

namespace curvesym {

std::string branch_label(Branch branch, int det_sign, int sigma_sign) {
    switch (branch) {
        case Branch::involution_d1:
            return det_sign >= 0 ? "involution/direct" : "involution/opposite";
        case Branch::plane_rotation_d1:
            return "plane-rotation";
        case Branch::ph_rotation_d1:
            return sigma_sign >= 0 ? "ph-rotation/+" : "ph-rotation/-";
        case Branch::d0:
            return det_sign >= 0 ? "d0/direct" : "d0/opposite";
    }
    return "?";
}

void ParamFamily::exclude(const Poly& factor) {
    if (factor.degree() < 1) return;
    excluded_b = excluded_b * factor.monic();
}

namespace {

Rational eval0(const RatFun& f) {
    auto v = f.eval(Rational(0));
    if (!v) throw VerificationError("value undefined at 0 in general position");
    return *v;
}

struct Constants {
    HodographData h;
    Rational n0;       // |x'(0)|^2
    Rational d0;       // <x'(0), x''(0)>
    Rational cross0sq; // |x'(0) x x''(0)|^2
    std::vector<Rational> x0, d1_0, d2_0, cross_0;
};

Constants base_constants(const CurveSpec& curve) {
    Constants k{hodograph(curve), Rational(0), Rational(0), Rational(0), {}, {}, {}, {}};
    k.n0 = eval0(k.h.norm1sq);
    k.d0 = eval0(k.h.dot12);
    k.cross0sq = eval0(k.h.cross12sq);
    if (k.n0 == 0 || k.cross0sq == 0)
        throw VerificationError("curve not in general position");
    for (const RatFun& f : curve.components()) k.x0.push_back(eval0(f));
    for (const RatFun& f : k.h.d1) k.d1_0.push_back(eval0(f));
    for (const RatFun& f : k.h.d2) k.d2_0.push_back(eval0(f));
    for (const RatFun& f : k.h.cross12) k.cross_0.push_back(eval0(f));
    return k;
}

/// Exact inverse of a small rational matrix (2x2 or 3x3) via the adjugate.
std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Rational>>& m) {
    size_t n = m.size();
    if (n == 2) {
        Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det == 0) throw VerificationError("singular frame matrix");
        return {{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}};
    }
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det == 0) throw VerificationError("singular frame matrix");
    std::vector<std::vector<Rational>> adj(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r1 = (i + 1) % 3, r2 = (i + 2) % 3, c1 = (j + 1) % 3, c2 = (j + 2) % 3;
            adj[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                (m[static_cast<size_t>(r1)][static_cast<size_t>(c1)] *
                     m[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -
                 m[static_cast<size_t>(r1)][static_cast<size_t>(c2)] *
                     m[static_cast<size_t>(r2)][static_cast<size_t>(c1)]) /
                det;
        }
    return adj;
}

}  // namespace

Poly curvature_prefilter(const CurveSpec& curve) {
    Constants k = base_constants(curve);
    RatFun n3 = k.h.norm1sq * k.h.norm1sq * k.h.norm1sq;
    RatFun expr = n3 * k.cross0sq - k.h.cross12sq * (k.n0 * k.n0 * k.n0);
    if (expr.is_zero())
        throw VerificationError("curvature condition identically zero on a nondegenerate curve");
    return expr.num().monic();
}

ParamFamily derive_involution_family(const CurveSpec& curve, int det_sign) {
    Constants k = base_constants(curve);
    RatFun bvar = RatFun::variable();
    RatFun numf = -(k.h.dot12 * k.n0 + k.h.norm1sq * k.d0);
    RatFun denf = (bvar * k.h.dot12 + k.h.norm1sq * Rational(2)) * k.n0;
    if (denf.is_zero())
        throw VerificationError("involution denominator identically zero");
    Poly shared = poly_gcd(numf.num(), denf.num());
    // Roots with x'(b) = 0 (cusps) always make both sides vanish and persist
    // under every reparametrization; they cannot carry a symmetry because
    // Q x'(0) = x'(b) Delta forces x'(b) != 0, so only other shared roots
    // trigger a retry.
    while (shared.degree() > 0) {
        Poly cusp = poly_gcd(shared, k.h.norm1sq.num());
        if (cusp.degree() < 1) break;
        shared = shared.exact_div(cusp).monic();
    }
    if (!numf.is_zero() && shared.degree() > 0 && !isolate_real_roots(shared).empty())
        throw RetryReparam("numerator and denominator of c(b) share a real root");
    ParamFamily fam;
    fam.branch = Branch::involution_d1;
    fam.d = 1;
    fam.det_sign = det_sign;
    fam.c_of_b = numf / denf;
    fam.a_of_b = RatFun(Rational(-1));
    fam.delta_of_b = RatFun(Rational(-1)) - bvar * fam.c_of_b;
    if (fam.delta_of_b.is_zero()) throw VerificationError("involution Delta identically zero");
    fam.exclude(fam.c_of_b.den());
    fam.exclude(fam.delta_of_b.den());
    fam.exclude(fam.delta_of_b.num());
    return fam;
}

ParamFamily derive_plane_rotation_family(const CurveSpec& curve) {
    if (curve.dim() != 2) throw std::invalid_argument("plane rotations need dim 2");
    Constants k = base_constants(curve);
    RatFun imw = k.h.cross12[2] / k.h.norm1sq;  // Im(z''/z')
    RatFun rew = k.h.dot12 / k.h.norm1sq;       // Re(z''/z')
    if (imw.is_zero()) throw VerificationError("Im(z''/z') vanishes: curve is a line");
    Rational imw0 = eval0(imw), rew0 = eval0(rew);
    ParamFamily fam;
    fam.branch = Branch::plane_rotation_d1;
    fam.d = 1;
    fam.delta_of_b = RatFun(imw0) / imw;
    fam.c_of_b = (rew * fam.delta_of_b - RatFun(rew0)) * Rational(1, 2);
    fam.a_of_b = fam.delta_of_b + RatFun::variable() * fam.c_of_b;
    fam.exclude(fam.a_of_b.den());
    fam.exclude(fam.c_of_b.den());
    fam.exclude(fam.delta_of_b.den());
    fam.exclude(fam.delta_of_b.num());
    return fam;
}

ParamFamily derive_ph_rotation_family(const CurveSpec& curve, const PHData& ph, int sigma_sign) {
    if (curve.dim() != 3) throw std::invalid_argument("PH rotations need dim 3");
    Constants k = base_constants(curve);
    RatFun s(ph.s_num, ph.s_den);
    Rational s0num = ph.s_num.eval(Rational(0)), s0den = ph.s_den.eval(Rational(0));
    if (s0num == 0 || s0den == 0) throw RetryReparam("sigma vanishes or is undefined at 0");
    ParamFamily fam;
    fam.branch = Branch::ph_rotation_d1;
    fam.d = 1;
    fam.sigma_sign = sigma_sign;
    fam.det_sign = 1;  // rotations are direct
    Rational s0 = s0num / s0den;
    fam.delta_of_b = RatFun(ph.s_den, ph.s_num) * (s0 * Rational(sigma_sign));
    RatFun ratio = k.h.dot12 / k.h.norm1sq;
    fam.c_of_b =
        fam.delta_of_b * ratio * Rational(1, 2) - RatFun(k.d0 / (k.n0 * 2));
    fam.a_of_b = fam.delta_of_b + RatFun::variable() * fam.c_of_b;
    fam.exclude(fam.a_of_b.den());
    fam.exclude(fam.c_of_b.den());
    fam.exclude(fam.delta_of_b.den());
    fam.exclude(fam.delta_of_b.num());
    return fam;
}

ParamFamily derive_d0_family(const CurveSpec& curve, int det_sign) {
    CurveSpec tilde = curve.inverted_param();
    Constants kt = base_constants(tilde);  // throws if tilde not in position
    Constants k = base_constants(curve);
    if (kt.d0 == 0)
        throw RetryReparam("<x~'(0), x~''(0)> vanishes; d0 family needs a different base point");
    if (k.h.dot12.is_zero())
        throw VerificationError("<x', x''> identically zero on a nondegenerate curve");
    ParamFamily fam;
    fam.branch = Branch::d0;
    fam.d = 0;
    fam.det_sign = det_sign;
    // a~(b~) per the ratio of the two inner-product constraints.
    fam.a_of_b = (k.h.norm1sq / kt.n0) * (RatFun(kt.d0) / k.h.dot12);
    fam.c_of_b = RatFun(Rational(1));
    fam.delta_of_b = -fam.a_of_b;  // det of (b~ t + a~)/t
    fam.exclude(fam.a_of_b.den());
    fam.exclude(fam.a_of_b.num());
    return fam;
}

IsometryFamily build_isometry_family(const CurveSpec& curve, ParamFamily& fam) {
    const bool d0 = fam.branch == Branch::d0;
    const CurveSpec base = d0 ? curve.inverted_param() : curve;
    Constants kb = base_constants(base);   // frame at t = 0 (x or x~)
    Constants kt = base_constants(curve);  // target side evaluated at b
    size_t n = static_cast<size_t>(curve.dim());

    IsometryFamily iso;
    iso.Q.assign(n, std::vector<RatFun>(n));
    iso.t.assign(n, RatFun());

    if (fam.branch == Branch::plane_rotation_d1) {
        // Q is the rotation by e^{i theta}(b) = Delta z'(b)/z'(0).
        const RatFun& dx = kt.h.d1[0];
        const RatFun& dy = kt.h.d1[1];
        Rational p0 = kb.d1_0[0], q0 = kb.d1_0[1];
        RatFun ere = fam.delta_of_b * (dx * p0 + dy * q0) / kb.n0;
        RatFun eim = fam.delta_of_b * (dy * p0 - dx * q0) / kb.n0;
        iso.Q = {{ere, -eim}, {eim, ere}};
    } else {
        // Columns of B(b): the images of x'(0), x''(0) (and their cross).
        const RatFun& delta = d0 ? fam.a_of_b : fam.delta_of_b;
        RatFun delta2 = delta * delta;
        std::vector<std::vector<RatFun>> bcols;
        std::vector<RatFun> col1, col2, col3;
        for (size_t i = 0; i < n; ++i) col1.push_back(kt.h.d1[i] * delta);
        if (d0) {
            for (size_t i = 0; i < n; ++i) col2.push_back(kt.h.d2[i] * delta2);
        } else {
            RatFun twocd = fam.c_of_b * delta * Rational(2);
            for (size_t i = 0; i < n; ++i)
                col2.push_back(kt.h.d2[i] * delta2 - kt.h.d1[i] * twocd);
        }
        bcols = {col1, col2};
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i) {
            a[i][0] = kb.d1_0[i];
            a[i][1] = kb.d2_0[i];
        }
        if (n == 3) {
            RatFun delta3 = delta2 * delta;
            for (size_t i = 0; i < n; ++i)
                col3.push_back(kt.h.cross12[i] * delta3 * Rational(fam.det_sign));
            bcols.push_back(col3);
            for (size_t i = 0; i < 3; ++i) a[i][2] = kb.cross_0[i];
        }
        auto ainv = invert_matrix(a);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                RatFun acc;
                for (size_t l = 0; l < n; ++l) acc = acc + bcols[l][i] * ainv[l][j];
                iso.Q[i][j] = acc;
            }
    }

    // Translation from evaluating the identity at t = 0: x(b) - Q * base(0).
    for (size_t i = 0; i < n; ++i) {
        RatFun acc = curve.component(i);  // as a function of b
        for (size_t j = 0; j < n; ++j) acc = acc - iso.Q[i][j] * kb.x0[j];
        iso.t[i] = acc;
    }

    for (const auto& row : iso.Q)
        for (const RatFun& q : row) fam.exclude(q.den());
    for (const RatFun& t : iso.t) fam.exclude(t.den());
    return iso;
}

namespace {

/// phi as a cleared pair (N, D) in Q[b][t], jointly normalized by the gcd of
/// the four coefficient polynomials.
std::pair<BPoly, BPoly> cleared_moebius(const ParamFamily& fam) {
    if (fam.d == 1) {
        Poly g = poly_lcm(fam.a_of_b.den(), fam.c_of_b.den());
        Poly an = fam.a_of_b.num() * g.exact_div(fam.a_of_b.den());
        Poly bn = Poly::x() * g;
        Poly cn = fam.c_of_b.num() * g.exact_div(fam.c_of_b.den());
        Poly dn = g;
        Poly common = poly_gcd(poly_gcd(an, bn), poly_gcd(cn, dn));
        if (common.degree() > 0) {
            an = an.exact_div(common);
            bn = bn.exact_div(common);
            cn = cn.exact_div(common);
            dn = dn.exact_div(common);
        }
        return {BPoly(std::vector<Poly>{bn, an}), BPoly(std::vector<Poly>{dn, cn})};
    }
    // d = 0: the assembly substitutes the affine map a~ t + b~ into x.
    const Poly& ad = fam.a_of_b.den();
    Poly an = fam.a_of_b.num();
    return {BPoly(std::vector<Poly>{Poly::x() * ad, an}), BPoly::of_b(ad)};
}

}  // namespace

CandidateSet candidate_polynomial(const CurveSpec& curve, const ParamFamily& fam,
                                  const IsometryFamily& iso,
                                  const std::optional<Poly>& prefilter) {
    const bool d0 = fam.branch == Branch::d0;
    const CurveSpec lhs_curve = d0 ? curve.inverted_param() : curve;
    size_t n = static_cast<size_t>(curve.dim());

    auto [nn, dd] = cleared_moebius(fam);
    auto composed = compose_all(curve, nn, dd);

    Poly lden = Poly::one();
    for (const RatFun& f : lhs_curve.components()) lden = poly_lcm(lden, f.den());

    CandidateSet out;
    for (size_t i = 0; i < n; ++i) {
        Poly bden = iso.t[i].den();
        for (size_t j = 0; j < n; ++j) bden = poly_lcm(bden, iso.Q[i][j].den());
        BPoly lhs;
        for (size_t j = 0; j < n; ++j) {
            const RatFun& q = iso.Q[i][j];
            Poly coef = q.num() * bden.exact_div(q.den());
            const RatFun& xj = lhs_curve.component(j);
            lhs = lhs + BPoly::outer(coef, xj.num() * lden.exact_div(xj.den()));
        }
        lhs = lhs + BPoly::outer(iso.t[i].num() * bden.exact_div(iso.t[i].den()), lden);
        BPoly identity = lhs * composed[i].second - composed[i].first * BPoly::outer(bden, lden);
        if (identity.is_zero()) continue;
        // Reduce the cleared identity against the pure-b content of the
        // clearing denominator, so the system carries the content of the
        // reduced numerator rather than artefacts of the clearing itself.
        std::vector<Poly> coeffs;
        for (const Poly& coeff : identity.tcoeffs())
            if (!coeff.is_zero()) coeffs.push_back(coeff);
        Poly den_content = bden.monic();
        if (!composed[i].second.is_zero())
            den_content = den_content * content_gcd(composed[i].second.tcoeffs());
        Poly reducible = poly_gcd(content_gcd(coeffs), den_content);
        for (Poly& coeff : coeffs) {
            if (reducible.degree() > 0) coeff = coeff.exact_div(reducible);
            out.system.push_back(coeff);
        }
    }
    if (d0) {
        // Consistency constraint a~^2 |x'(b~)|^2 = |x~'(0)|^2 joins the system.
        CurveSpec tilde = curve.inverted_param();
        Constants kt = base_constants(tilde);
        Constants k = base_constants(curve);
        RatFun cons = fam.a_of_b * fam.a_of_b * k.h.norm1sq - RatFun(kt.n0);
        if (!cons.is_zero()) out.system.push_back(cons.num());
    }
    if (out.system.empty())
        throw VerificationError("identity system vanished identically; degenerate input");

    // Fold the content gcd starting from the lowest degrees.
    std::sort(out.system.begin(), out.system.end(),
              [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    out.raw_content = content_gcd(out.system);

    Poly p = out.raw_content;
    Poly excluded = squarefree_part(fam.excluded_b);
    while (p.degree() > 0) {
        Poly g = poly_gcd(p, excluded);
        if (g.degree() < 1) break;
        p = p.exact_div(g).monic();
    }
    if (!d0 && prefilter && p.degree() > 0) p = poly_gcd(p, *prefilter);
    if (p.degree() > 0) p = squarefree_part(p);
    out.P = p.monic();
    return out;
}

namespace {

AlgValue value_at(const RatFun& f, const RootPtr& root) { return AlgValue::of_ratfun(f, root); }

bool matrix_is_identity(const std::vector<std::vector<AlgValue>>& q) {
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) {
            if (i == j ? !q[i][j].equals(AlgValue(Rational(1))) : !q[i][j].is_zero()) return false;
        }
    return true;
}

bool orthogonal(const std::vector<std::vector<AlgValue>>& q) {
    size_t n = q.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            AlgValue acc{Rational(0)};
            for (size_t k = 0; k < n; ++k) acc = acc + q[k][i] * q[k][j];
            if (i == j ? !acc.equals(AlgValue(Rational(1))) : !acc.is_zero()) return false;
        }
    return true;
}

bool matrix_squares_to_identity(const std::vector<std::vector<AlgValue>>& q) {
    size_t n = q.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            AlgValue acc{Rational(0)};
            for (size_t k = 0; k < n; ++k) acc = acc + q[i][k] * q[k][j];
            if (i == j ? !acc.equals(AlgValue(Rational(1))) : !acc.is_zero()) return false;
        }
    return true;
}

}  // namespace

std::vector<VerifiedSymmetry> solve_candidates(const CurveSpec& curve, const ParamFamily& fam,
                                               const IsometryFamily& iso, CandidateSet& cands) {
    std::vector<VerifiedSymmetry> out;
    if (cands.P.degree() < 1) return out;
    cands.roots = isolate_real_roots(cands.P);
    Poly excluded = squarefree_part(fam.excluded_b);
    size_t n = static_cast<size_t>(curve.dim());
    for (const RealAlgebraic& alpha : cands.roots) {
        RootPtr root = std::make_shared<RealAlgebraic>(alpha);
        if (vanishes_at(excluded, alpha))
            throw VerificationError("excluded factor vanishes at a candidate root");

        VerifiedSymmetry s;
        s.branch = fam.branch;
        s.det_sign = fam.det_sign;
        s.sigma_sign = fam.sigma_sign;
        s.b_star = root;
        s.dim = curve.dim();
        s.Q.assign(n, std::vector<AlgValue>(n, AlgValue(Rational(0))));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) s.Q[i][j] = value_at(iso.Q[i][j], root);
        for (size_t i = 0; i < n; ++i) s.t.push_back(value_at(iso.t[i], root));
        if (fam.d == 1) {
            s.phi = MoebiusAlg{value_at(fam.a_of_b, root), AlgValue::of_root(root),
                               value_at(fam.c_of_b, root), AlgValue(Rational(1))};
        } else {
            s.phi = MoebiusAlg{AlgValue::of_root(root), value_at(fam.a_of_b, root),
                               AlgValue(Rational(1)), AlgValue(Rational(0))};
        }
        if (s.phi.delta().is_zero())
            throw VerificationError("non-invertible Moebius transformation at a candidate root");

        // Exact checks; failures are discarded, not errors.
        if (!orthogonal(s.Q)) continue;
        bool identity_ok = true;
        for (const Poly& coeff : cands.system)
            if (!vanishes_at(coeff, alpha)) {
                identity_ok = false;
                break;
            }
        if (!identity_ok) continue;
        if (fam.branch == Branch::involution_d1 && !matrix_squares_to_identity(s.Q)) continue;
        bool trivial = matrix_is_identity(s.Q);
        if (trivial)
            for (const AlgValue& v : s.t) trivial = trivial && v.is_zero();
        if (trivial) continue;
        out.push_back(std::move(s));
    }
    return out;
}

bool is_involution(const VerifiedSymmetry& s) { return matrix_squares_to_identity(s.Q); }

bool same_symmetry(const VerifiedSymmetry& a, const VerifiedSymmetry& b) {
    bool a_d0 = a.branch == Branch::d0, b_d0 = b.branch == Branch::d0;
    if (a_d0 != b_d0) return false;
    if (a_d0) {
        // (b~ : a~ : 1 : 0) quadruples: equal iff both entries match.
        return a.phi.a.equals(b.phi.a) && a.phi.b.equals(b.phi.b);
    }
    // (a : b : c : 1) quadruples.
    return a.phi.b.equals(b.phi.b) && a.phi.a.equals(b.phi.a) && a.phi.c.equals(b.phi.c);
}

namespace {

Rational sort_key(const VerifiedSymmetry& s) {
    const RealAlgebraic& r = *s.b_star;
    return r.is_rational() ? *r.exact_rational() : r.isolating().mid();
}

int branch_rank(const VerifiedSymmetry& s) {
    int base = static_cast<int>(s.branch) * 8;
    return base + (s.det_sign < 0 ? 1 : 0) + (s.sigma_sign < 0 ? 2 : 0);
}

/// The trivial-phi test for the early exit: at a root r of the curvature
/// condition, does the family give the identity transformation?
bool family_trivial_at(const ParamFamily& fam, const RealAlgebraic& r) {
    if (fam.d != 1) return false;
    if (!r.is_rational() || *r.exact_rational() != 0) return false;
    auto a0 = fam.a_of_b.eval(Rational(0));
    auto c0 = fam.c_of_b.eval(Rational(0));
    return a0 && c0 && *a0 == 1 && *c0 == 0;
}

}  // namespace

DetectionResult detect_all(const CurveSpec& curve, const DetectOptions& options) {
    Degeneracy deg = is_degenerate(curve);
    if (deg == Degeneracy::line) throw InputError("degenerate input: the curve is a line");
    if (deg == Degeneracy::circle) throw InputError("degenerate input: the curve is a circle");

    DetectionResult res{curve, curve, MoebiusQ{}, Properness::inconclusive,
                        false, true, {}, {}};
    if (!options.skip_properness) {
        res.properness = properness_check(curve, options.properness_trials);
        if (res.properness == Properness::improper)
            throw InputError("improper parametrization: reparametrize properly first");
    }

    // General-position loop with deterministic retry on family derivation
    // failures (shared real roots in c(b), sigma vanishing at the base point).
    const int max_retries = 16;
    std::vector<std::pair<ParamFamily, IsometryFamily>> planned;
    std::optional<Poly> prefilter_sf;
    std::optional<PHData> ph;
    for (int attempt = 0;; ++attempt) {
        if (attempt >= max_retries)
            throw InputError("no usable general-position reparametrization found");
        planned.clear();
        if (options.reparam_override) {
            if (attempt > 0) throw RetryReparam("pinned reparametrization is unusable");
            res.reparam = *options.reparam_override;
            res.working = curve.reparam(res.reparam);
            if (auto fail = general_position_failure(res.working))
                throw InputError("pinned reparametrization fails general position: " + *fail);
        } else {
            auto [u, w] = general_position_reparam(curve, options.max_reparam_candidates, attempt);
            res.reparam = u;
            res.working = w;
        }
        try {
            const CurveSpec& w = res.working;
            bool want_inv = options.branches != DetectOptions::BranchFilter::rotations;
            bool want_rot = options.branches != DetectOptions::BranchFilter::involutions;
            ph = w.dim() == 3 ? ph_sigma(w) : std::nullopt;
            res.is_ph = ph.has_value();
            if (want_inv) {
                if (w.dim() == 2) {
                    ParamFamily f = derive_involution_family(w);
                    IsometryFamily i = build_isometry_family(w, f);
                    planned.emplace_back(std::move(f), std::move(i));
                } else {
                    for (int ds : {1, -1}) {
                        ParamFamily f = derive_involution_family(w, ds);
                        IsometryFamily i = build_isometry_family(w, f);
                        planned.emplace_back(std::move(f), std::move(i));
                    }
                }
            }
            if (want_rot && w.dim() == 2) {
                ParamFamily f = derive_plane_rotation_family(w);
                IsometryFamily i = build_isometry_family(w, f);
                planned.emplace_back(std::move(f), std::move(i));
            }
            if (want_rot && w.dim() == 3 && ph) {
                for (int sg : {1, -1}) {
                    ParamFamily f = derive_ph_rotation_family(w, *ph, sg);
                    IsometryFamily i = build_isometry_family(w, f);
                    planned.emplace_back(std::move(f), std::move(i));
                }
            }
            // The d = 0 branch detects both kinds; it always runs.
            if (w.dim() == 2) {
                ParamFamily f = derive_d0_family(w);
                IsometryFamily i = build_isometry_family(w, f);
                planned.emplace_back(std::move(f), std::move(i));
            } else {
                for (int ds : {1, -1}) {
                    ParamFamily f = derive_d0_family(w, ds);
                    IsometryFamily i = build_isometry_family(w, f);
                    planned.emplace_back(std::move(f), std::move(i));
                }
            }
            prefilter_sf = squarefree_part(curvature_prefilter(w));
            break;
        } catch (const RetryReparam&) {
            if (options.reparam_override)
                throw InputError("pinned reparametrization unusable for family derivation");
            continue;
        }
    }

    res.rotations_complete = !(res.working.dim() == 3 && !res.is_ph);

    std::vector<RealAlgebraic> prefilter_roots = isolate_real_roots(*prefilter_sf);
    for (auto& [fam, iso] : planned) {
        BranchRun run;
        run.branch = fam.branch;
        run.det_sign = fam.det_sign;
        run.sigma_sign = fam.sigma_sign;
        run.label = branch_label(fam.branch, fam.det_sign, fam.sigma_sign);
        bool skip = false;
        if (fam.d == 1) {
            skip = true;
            for (const RealAlgebraic& r : prefilter_roots)
                if (!family_trivial_at(fam, r)) {
                    skip = false;
                    break;
                }
        }
        if (skip) {
            run.skipped_by_prefilter = true;
            run.P = Poly::one();
            run.raw_content = Poly::one();
        } else {
            CandidateSet cands = candidate_polynomial(res.working, fam, iso, prefilter_sf);
            run.found = solve_candidates(res.working, fam, iso, cands);
            run.P = cands.P;
            run.raw_content = cands.raw_content;
            run.system = std::move(cands.system);
            run.root_count = cands.roots.size();
        }
        res.branches.push_back(std::move(run));
    }

    // Deduped union in a deterministic order.
    std::vector<VerifiedSymmetry> all;
    for (const BranchRun& run : res.branches)
        for (const VerifiedSymmetry& s : run.found) {
            bool dup = false;
            for (const VerifiedSymmetry& seen : all)
                if (same_symmetry(seen, s)) {
                    dup = true;
                    break;
                }
            if (!dup) all.push_back(s);
        }
    std::sort(all.begin(), all.end(), [](const VerifiedSymmetry& x, const VerifiedSymmetry& y) {
        int bx = branch_rank(x), by = branch_rank(y);
        if (bx != by) return bx < by;
        return sort_key(x) < sort_key(y);
    });
    res.symmetries = std::move(all);
    return res;
}

}  // namespace curvesym
