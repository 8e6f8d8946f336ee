#include "curvesym/curve.hpp"

#include <algorithm>
#include <random>

namespace curvesym {

MoebiusQ MoebiusQ::compose(const MoebiusQ& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

RatFun MoebiusQ::apply(const RatFun& x) const {
    return compose_moebius(x, Poly{b, a}, Poly{d, c});
}

std::optional<Rational> MoebiusQ::eval(const Rational& t) const {
    Rational dd = c * t + d;
    if (dd == 0) return std::nullopt;
    return (a * t + b) / dd;
}

namespace {

std::string linear_desc(const Rational& hi, const Rational& lo) {
    std::string out;
    if (hi != 0) {
        if (hi == 1)
            out = "t";
        else if (hi == -1)
            out = "-t";
        else
            out = curvesym::to_string(hi) + "*t";
    }
    if (lo != 0 || out.empty()) {
        if (out.empty())
            out = curvesym::to_string(lo);
        else
            out += (lo < 0 ? " - " : " + ") + curvesym::to_string(abs_q(lo));
    }
    return out;
}

}  // namespace

std::string MoebiusQ::to_string() const {
    std::string n = linear_desc(a, b), m = linear_desc(c, d);
    return "(" + n + ")/" + (c != 0 ? "(" + m + ")" : m);
}

CurveSpec::CurveSpec(int dim, std::vector<RatFun> components, std::string name)
    : dim_(dim), comp_(std::move(components)), name_(std::move(name)) {
    if (dim_ != 2 && dim_ != 3) throw InputError("curve dimension must be 2 or 3");
    if (comp_.size() != static_cast<size_t>(dim_))
        throw InputError("component count does not match dimension");
    bool any_nonconstant = false;
    for (const RatFun& f : comp_)
        if (!f.is_constant()) any_nonconstant = true;
    if (!any_nonconstant) throw InputError("all components constant");
}

long CurveSpec::degree_bound() const {
    long d = 1;
    for (const RatFun& f : comp_) d = std::max({d, f.num().degree(), f.den().degree()});
    return d;
}

CurveSpec CurveSpec::reparam(const MoebiusQ& u) const {
    if (u.delta() == 0) throw InputError("reparametrization is not invertible");
    std::vector<RatFun> out;
    out.reserve(comp_.size());
    for (const RatFun& f : comp_) out.push_back(u.apply(f));
    return CurveSpec(dim_, std::move(out), name_);
}

CurveSpec CurveSpec::inverted_param() const {
    std::vector<RatFun> out;
    out.reserve(comp_.size());
    for (const RatFun& f : comp_)
        out.push_back(compose_moebius(f, Poly::one(), Poly::x()));  // x(1/t)
    return CurveSpec(dim_, std::move(out), name_);
}

std::optional<std::vector<Rational>> CurveSpec::eval(const Rational& t) const {
    std::vector<Rational> p;
    p.reserve(comp_.size());
    for (const RatFun& f : comp_) {
        auto v = f.eval(t);
        if (!v) return std::nullopt;
        p.push_back(*v);
    }
    return p;
}

HodographData hodograph(const CurveSpec& curve) {
    HodographData h;
    for (const RatFun& f : curve.components()) {
        h.d1.push_back(f.derivative());
        h.d2.push_back(h.d1.back().derivative());
    }
    auto at = [&](const std::vector<RatFun>& v, size_t i) {
        return i < v.size() ? v[i] : RatFun();
    };
    h.cross12 = {at(h.d1, 1) * at(h.d2, 2) - at(h.d1, 2) * at(h.d2, 1),
                 at(h.d1, 2) * at(h.d2, 0) - at(h.d1, 0) * at(h.d2, 2),
                 at(h.d1, 0) * at(h.d2, 1) - at(h.d1, 1) * at(h.d2, 0)};
    h.norm1sq = RatFun();
    h.dot12 = RatFun();
    for (size_t i = 0; i < h.d1.size(); ++i) {
        h.norm1sq = h.norm1sq + h.d1[i] * h.d1[i];
        h.dot12 = h.dot12 + h.d1[i] * h.d2[i];
    }
    h.cross12sq = RatFun();
    for (const RatFun& c : h.cross12) h.cross12sq = h.cross12sq + c * c;
    if (h.norm1sq.is_zero()) throw InputError("identically vanishing hodograph");
    h.kappa_sq = h.cross12sq / (h.norm1sq * h.norm1sq * h.norm1sq);
    return h;
}

RatFun curvature_sq(const CurveSpec& curve) { return hodograph(curve).kappa_sq; }

namespace {

/// Nontrivial (A, B, C, D) with sum A_j e_j = 0 and (A, B, C) != 0, if any:
/// exact nullspace of the coefficient matrix.
bool is_planar(const CurveSpec& curve) {
    Poly l = Poly::one();
    for (const RatFun& f : curve.components()) l = poly_lcm(l, f.den());
    std::vector<Poly> e;
    for (const RatFun& f : curve.components())
        e.push_back(f.num() * l.exact_div(f.den()));
    e.push_back(l);
    long maxdeg = 0;
    for (const Poly& p : e) maxdeg = std::max(maxdeg, p.degree());
    size_t rows = static_cast<size_t>(maxdeg) + 1, cols = e.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols, Rational(0)));
    for (size_t j = 0; j < cols; ++j)
        for (long k = 0; k <= e[j].degree(); ++k) m[static_cast<size_t>(k)][j] = e[j][static_cast<size_t>(k)];
    // Gaussian elimination to reduced form; find nullspace basis.
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        Rational piv = m[rank][col];
        for (size_t j = 0; j < cols; ++j) m[rank][j] /= piv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    for (size_t freecol = 0; freecol < cols; ++freecol) {
        if (pivot_of_col[freecol] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[freecol] = 1;
        for (size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -m[static_cast<size_t>(pivot_of_col[col])][freecol];
        if (v[0] != 0 || v[1] != 0 || v[2] != 0) return true;
    }
    return false;
}

}  // namespace

Degeneracy is_degenerate(const CurveSpec& curve) {
    HodographData h = hodograph(curve);
    if (h.cross12sq.is_zero()) return Degeneracy::line;
    if (h.kappa_sq.is_constant()) {
        if (curve.dim() == 2) return Degeneracy::circle;
        if (is_planar(curve)) return Degeneracy::circle;
    }
    return Degeneracy::ok;
}

namespace {

bool defined_nonzero_at0(const RatFun& f) {
    auto v = f.eval(Rational(0));
    return v && *v != 0;
}

std::optional<std::string> position_failure_one(const CurveSpec& curve, const char* tag) {
    for (const RatFun& f : curve.components())
        if (!f.eval(Rational(0))) return std::string(tag) + ": point undefined at 0";
    HodographData h = hodograph(curve);
    if (!defined_nonzero_at0(h.norm1sq)) return std::string(tag) + ": vanishing first derivative at 0";
    if (!defined_nonzero_at0(h.cross12sq))
        return std::string(tag) + ": curvature undefined or zero at 0";
    return std::nullopt;
}

}  // namespace

std::optional<std::string> general_position_failure(const CurveSpec& curve) {
    if (auto f = position_failure_one(curve, "base")) return f;
    if (auto f = position_failure_one(curve.inverted_param(), "infinity")) return f;
    return std::nullopt;
}

namespace {

/// 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, ...
Rational height_sequence(int index) {
    if (index == 0) return Rational(0);
    int block = (index - 1) / 4 + 1;  // 1, 1, 1, 1, 2, 2, 2, 2, ...
    int kind = (index - 1) % 4;
    switch (kind) {
        case 0: return Rational(block);
        case 1: return Rational(-block);
        case 2: return make_rational(1, block + 1);
        default: return make_rational(-1, block + 1);
    }
}

}  // namespace

std::pair<MoebiusQ, CurveSpec> general_position_reparam(const CurveSpec& curve,
                                                        int max_candidates, int skip_successes) {
    std::string last_failure = "no candidate tried";
    int tried = 0, successes = 0;
    auto consider = [&](const MoebiusQ& u) -> std::optional<std::pair<MoebiusQ, CurveSpec>> {
        ++tried;
        CurveSpec cand = curve.reparam(u);
        auto fail = general_position_failure(cand);
        if (fail) {
            last_failure = *fail;
            return std::nullopt;
        }
        if (successes++ < skip_successes) return std::nullopt;
        return std::make_pair(u, std::move(cand));
    };
    // Affine shifts cannot fix behaviour at infinity; skip them when some
    // component is unbounded there.
    bool unbounded = false;
    for (const RatFun& f : curve.components())
        if (f.num().degree() > f.den().degree()) unbounded = true;
    if (!unbounded) {
        for (int i = 0; i < max_candidates && tried < max_candidates; ++i) {
            MoebiusQ u{Rational(1), height_sequence(i), Rational(0), Rational(1)};
            if (auto hit = consider(u)) return *hit;
        }
    }
    // Full Moebius maps (p t + q)/(t + r), enumerated by height.
    for (int h = 0; tried < max_candidates; ++h) {
        for (int i = 0; i <= h && tried < max_candidates; ++i) {
            for (int j = 0; j <= h && tried < max_candidates; ++j) {
                for (int k = 0; k <= h && tried < max_candidates; ++k) {
                    if (std::max({i, j, k}) != h) continue;
                    MoebiusQ u{height_sequence(i), height_sequence(j), Rational(1),
                               height_sequence(k)};
                    if (u.delta() == 0) continue;
                    if (auto hit = consider(u)) return *hit;
                }
            }
        }
    }
    throw InputError("general-position search exhausted after " + std::to_string(tried) +
                     " candidates; last failure: " + last_failure);
}

Properness properness_check(const CurveSpec& curve, int trials) {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> numer(-40, 40);
    std::uniform_int_distribution<int> denom(1, 12);
    int proper_votes = 0, improper_votes = 0;
    for (int trial = 0; trial < trials;) {
        Rational t0 = make_rational(numer(rng), denom(rng));
        bool pole = false;
        for (const RatFun& f : curve.components())
            if (!f.eval(t0)) pole = true;
        if (pole) continue;
        std::vector<Poly> fibers;
        for (const RatFun& f : curve.components()) {
            Poly g = f.num() * f.den().eval(t0) - f.den() * f.num().eval(t0);
            if (!g.is_zero()) fibers.push_back(g);
        }
        if (fibers.empty()) continue;
        Poly g = content_gcd(fibers);
        ++trial;
        if (g.degree() == 1)
            ++proper_votes;
        else if (g.degree() > 1)
            ++improper_votes;
    }
    if (proper_votes == trials) return Properness::proper;
    if (improper_votes == trials) return Properness::improper;
    return Properness::inconclusive;
}

std::optional<PHData> ph_sigma(const CurveSpec& curve) {
    HodographData h = hodograph(curve);
    const RatFun& n2 = h.norm1sq;
    if (n2.is_zero()) return std::nullopt;
    Poly numerator = n2.num();
    if (numerator.leading() < 0) return std::nullopt;
    auto dn = square_decompose(numerator);
    if (!dn) return std::nullopt;
    auto dd = square_decompose(n2.den());
    if (!dd) return std::nullopt;
    return PHData{dn->first / dd->first, dn->second, dd->second};
}

std::vector<std::pair<BPoly, BPoly>> compose_all(const CurveSpec& curve, const BPoly& n,
                                                 const BPoly& d) {
    std::vector<std::pair<BPoly, BPoly>> out;
    out.reserve(curve.components().size());
    for (const RatFun& f : curve.components()) out.push_back(compose_component(f, n, d));
    return out;
}

MoebiusAlg MoebiusAlg::compose(const MoebiusAlg& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool MoebiusAlg::is_identity() const {
    return b.is_zero() && c.is_zero() && a.equals(d) && !a.is_zero();
}

bool MoebiusAlg::same_map(const MoebiusAlg& o) const {
    // All 2x2 minors of the stacked coefficient quadruples vanish.
    const AlgValue* u[4] = {&a, &b, &c, &d};
    const AlgValue* v[4] = {&o.a, &o.b, &o.c, &o.d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(*u[i] * *v[j] - *u[j] * *v[i]).is_zero()) return false;
    return true;
}

std::optional<int> moebius_order(const MoebiusAlg& phi, int bound) {
    if (phi.delta().is_zero()) throw std::invalid_argument("moebius_order: singular map");
    MoebiusAlg acc = phi;
    for (int k = 1; k <= bound; ++k) {
        if (acc.is_identity()) return k;
        acc = acc.compose(phi);
    }
    return std::nullopt;
}

}  // namespace curvesym
