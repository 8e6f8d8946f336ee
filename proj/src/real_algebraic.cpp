#include "curvesym/real_algebraic.hpp"

#include "int_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvesym {

RealAlgebraic::RealAlgebraic(Poly defining, Interval isolating, std::optional<Rational> exact)
    : defining_(std::move(defining)), isolating_(std::move(isolating)), exact_(std::move(exact)) {
    if (defining_.is_zero() || defining_.degree() < 1)
        throw std::invalid_argument("RealAlgebraic: defining polynomial must be nonconstant");
    defining_ = defining_.monic();
    if (exact_) {
        if (defining_.eval(*exact_) != 0)
            throw std::invalid_argument("RealAlgebraic: exact root fails defining polynomial");
        if (!isolating_.contains(*exact_))
            throw std::invalid_argument("RealAlgebraic: exact root outside isolating interval");
    } else {
        if (defining_.eval(isolating_.lo) == 0 || defining_.eval(isolating_.hi) == 0)
            throw std::invalid_argument(
                "RealAlgebraic: endpoint hits a root; pass exact_rational instead");
        if (sturm_count(defining_, isolating_) != 1)
            throw std::invalid_argument("RealAlgebraic: interval does not isolate a single root");
    }
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& r) {
    return RealAlgebraic(Poly{-r, Rational(1)}, Interval::point(r), r);
}

namespace {

/// Sign-correct Sturm chain built over the integers: each pseudo-remainder is
/// negated according to the sign of the pseudo-division multiplier and then
/// rescaled to a primitive integer polynomial.
struct SturmChain {
    std::vector<Poly> elems;

    explicit SturmChain(const Poly& p) {
        using intpoly::IVec;
        IVec a = intpoly::primitive_int(p);
        IVec b = intpoly::primitive_int(p.derivative());
        std::vector<IVec> chain;
        chain.push_back(a);
        if (!b.empty() && a.size() > 1) {
            chain.push_back(b);
            while (true) {
                long da = static_cast<long>(chain[chain.size() - 2].size()) - 1;
                long db = static_cast<long>(chain.back().size()) - 1;
                IVec r = intpoly::prem(chain[chain.size() - 2], chain.back());
                if (r.empty()) break;
                long e = da - db + 1;
                bool multiplier_positive = chain.back().back() > 0 || e % 2 == 0;
                if (multiplier_positive)
                    for (Int& c : r) c = -c;
                intpoly::make_primitive(r);
                chain.push_back(std::move(r));
            }
        }
        elems.reserve(chain.size());
        for (const auto& v : chain) elems.push_back(intpoly::to_poly(v));
    }

    int variations_at(const Rational& x) const {
        int count = 0, prev = 0;
        for (const Poly& s : elems) {
            int sg = s.sign_at_rational(x);
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    }
};

/// Moves `endpoint` toward `other` by a dyadic step small enough that p has
/// no root strictly between the two points, certified by the derivative
/// having constant sign on the closed segment. Requires p(endpoint) = 0.
Rational step_off_root(const Poly& p, const Rational& endpoint, const Rational& other) {
    Poly dp = p.derivative();
    Rational span = other - endpoint;
    for (int k = 1;; ++k) {
        span /= 2;
        Rational candidate = endpoint + span;
        Interval seg = endpoint < candidate ? Interval(endpoint, candidate)
                                            : Interval(candidate, endpoint);
        if (eval_interval(dp, seg).sign() != 0 && p.eval(candidate) != 0) return candidate;
        if (k > 4096) throw std::logic_error("step_off_root failed to certify");
    }
}

}  // namespace

int sturm_count(const Poly& p, const Interval& iv) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (iv.is_point()) return p.eval(iv.lo) == 0 ? 1 : 0;
    if (p.degree() == 0) return 0;
    Rational lo = iv.lo, hi = iv.hi;
    int count = 0;
    if (p.eval(hi) == 0) {
        ++count;  // hi belongs to the half-open interval
        hi = step_off_root(p, hi, lo);
    }
    if (p.eval(lo) == 0) lo = step_off_root(p, lo, hi);
    if (lo >= hi) return count;
    SturmChain chain(p);
    count += chain.variations_at(lo) - chain.variations_at(hi);
    return count;
}

namespace {

struct BisectionRun {
    std::optional<Rational> rational_hit;
    std::vector<Interval> intervals;  // endpoints are non-roots; one root each
};

BisectionRun bisect_isolate(const Poly& cur) {
    BisectionRun out;
    if (cur.degree() < 1) return out;
    Rational bound(0);
    for (long i = 0; i < cur.degree(); ++i) {
        Rational r = abs_q(cur[static_cast<size_t>(i)] / cur.leading());
        if (r > bound) bound = r;
    }
    Rational M = bound + 1;
    SturmChain chain(cur);
    struct Seg {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Seg> stack{{-M, M, chain.variations_at(-M), chain.variations_at(M)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int n = s.vlo - s.vhi;
        if (n == 0) continue;
        if (n == 1) {
            out.intervals.emplace_back(s.lo, s.hi);
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (cur.eval(mid) == 0) {
            out.rational_hit = mid;
            return out;
        }
        int vmid = chain.variations_at(mid);
        stack.push_back({s.lo, mid, s.vlo, vmid});
        stack.push_back({mid, s.hi, vmid, s.vhi});
    }
    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

/// One sign-change bisection step; the interval keeps bracketing the root.
void shrink(const Poly& cur, Interval& iv) {
    Rational mid = iv.mid();
    int smid = cur.sign_at_rational(mid);
    if (smid == 0) throw std::logic_error("shrink: unexpected rational root");
    if (cur.sign_at_rational(iv.lo) * smid < 0)
        iv = Interval(iv.lo, mid);
    else
        iv = Interval(mid, iv.hi);
}

}  // namespace

std::vector<RealAlgebraic> isolate_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    Poly sf = squarefree_part(p);
    if (sf.degree() < 1) return {};

    std::vector<Rational> rationals;
    Poly cur = sf;
    std::vector<Interval> candidates;
    while (true) {
        BisectionRun run = bisect_isolate(cur);
        if (run.rational_hit) {
            rationals.push_back(*run.rational_hit);
            cur = cur.exact_div(Poly{-*run.rational_hit, Rational(1)});
            continue;
        }
        candidates = std::move(run.intervals);
        break;
    }

    // Continued-fraction screening: the remaining roots are either certified
    // irrational or found exactly. Denominators of rational roots divide the
    // leading coefficient of the primitive integer polynomial.
    std::vector<Interval> irrational;
    if (!candidates.empty()) {
        auto prim = intpoly::primitive_int(cur);
        Int qbound = abs(prim.back());
        Rational width_limit = Rational(1) / Rational(qbound * qbound + 1);
        for (Interval iv : candidates) {
            bool found = false;
            while (true) {
                Rational r = simplest_in(iv.lo, iv.hi);
                if (qbound % den(r) == 0 && cur.eval(r) == 0) {
                    rationals.push_back(r);
                    found = true;
                    break;
                }
                if (iv.width() < width_limit) break;  // certified irrational
                Rational mid = iv.mid();
                if (cur.eval(mid) == 0) {
                    rationals.push_back(mid);
                    found = true;
                    break;
                }
                shrink(cur, iv);
            }
            if (!found) irrational.push_back(iv);
        }
    }

    // Separate irrational intervals from rational root points and from each
    // other, and keep sf nonzero at endpoints.
    for (Interval& iv : irrational) {
        auto dirty = [&]() {
            if (sf.eval(iv.lo) == 0 || sf.eval(iv.hi) == 0) return true;
            for (const Rational& r : rationals)
                if (iv.contains(r)) return true;
            return false;
        };
        while (dirty()) shrink(cur, iv);
    }
    std::sort(irrational.begin(), irrational.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (size_t i = 0; i + 1 < irrational.size(); ++i) {
        while (irrational[i].hi >= irrational[i + 1].lo) {
            shrink(cur, irrational[i]);
            shrink(cur, irrational[i + 1]);
        }
    }

    std::vector<RealAlgebraic> out;
    for (const Rational& r : rationals) out.push_back(RealAlgebraic(sf, Interval::point(r), r));
    for (const Interval& iv : irrational) out.push_back(RealAlgebraic(sf, iv));
    std::sort(out.begin(), out.end(), [](const RealAlgebraic& a, const RealAlgebraic& b) {
        Rational ka = a.is_rational() ? *a.exact_rational() : a.isolating().mid();
        Rational kb = b.is_rational() ? *b.exact_rational() : b.isolating().mid();
        return ka < kb;
    });
    for (const RealAlgebraic& alpha : out) {
        if (sturm_count(sf, alpha.isolating()) != 1)
            throw std::logic_error("isolate_real_roots: certification failed");
    }
    return out;
}

RealAlgebraic refine_root(const RealAlgebraic& alpha, const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refine_root: width must be positive");
    if (alpha.is_rational())
        return RealAlgebraic(alpha.defining(), Interval::point(*alpha.exact_rational()),
                             alpha.exact_rational());
    Interval iv = alpha.isolating();
    while (iv.width() > width) shrink(alpha.defining(), iv);
    return RealAlgebraic(alpha.defining(), iv);
}

namespace {

/// g and (g mod defining) agree at every root of the defining polynomial;
/// reducing first keeps all downstream work at the defining degree.
Poly reduce_mod_defining(const Poly& g, const Poly& defining) {
    if (g.degree() < defining.degree()) return g;
    return g.divmod(defining).second;
}

}  // namespace

bool vanishes_at(const Poly& g, const RealAlgebraic& alpha) {
    if (g.is_zero()) return true;
    if (alpha.is_rational()) return g.eval(*alpha.exact_rational()) == 0;
    Poly r = reduce_mod_defining(g, alpha.defining());
    if (r.is_zero()) return true;
    Poly h = poly_gcd(r, alpha.defining());
    if (h.degree() < 1) return false;
    return sturm_count(h, alpha.isolating()) == 1;
}

int sign_at(const Poly& g, const RealAlgebraic& alpha) {
    if (alpha.is_rational()) return g.sign_at_rational(*alpha.exact_rational());
    Poly r = reduce_mod_defining(g, alpha.defining());
    if (vanishes_at(r, alpha)) return 0;
    Interval iv = alpha.isolating();
    while (true) {
        int s = eval_interval(r, iv).sign();
        if (s != 0) return s;
        shrink(alpha.defining(), iv);
    }
}

bool same_number(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.is_rational() && b.is_rational()) return *a.exact_rational() == *b.exact_rational();
    if (a.is_rational()) {
        const Rational& r = *a.exact_rational();
        return b.isolating().contains(r) && b.defining().eval(r) == 0;
    }
    if (b.is_rational()) return same_number(b, a);
    if (a.isolating().disjoint(b.isolating())) return false;
    Poly g = poly_gcd(a.defining(), b.defining());
    if (g.degree() < 1) return false;
    if (!vanishes_at(g, a) || !vanishes_at(g, b)) return false;
    Interval ia = a.isolating(), ib = b.isolating();
    while (true) {
        if (ia.disjoint(ib)) return false;
        if (sturm_count(g, ia.hull(ib)) == 1) return true;
        shrink(a.defining(), ia);
        shrink(b.defining(), ib);
    }
}

int compare_to_rational(const RealAlgebraic& alpha, const Rational& r) {
    if (alpha.is_rational()) {
        Rational d = *alpha.exact_rational() - r;
        return sign(d);
    }
    if (alpha.isolating().contains(r) && alpha.defining().eval(r) == 0) return 0;
    Interval iv = alpha.isolating();
    while (iv.contains(r)) shrink(alpha.defining(), iv);
    return iv.lo > r ? 1 : -1;
}

}  // namespace curvesym
