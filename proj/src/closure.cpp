#include "curvesym/detect.hpp"

#include <array>
#include <deque>

namespace curvesym {

namespace {

using Quad = std::array<AlgValue, 4>;
using IQuad = std::array<Interval, 4>;

RootPtr field_of(const GroupElement& e) {
    const AlgValue* entries[4] = {&e.phi.a, &e.phi.b, &e.phi.c, &e.phi.d};
    for (const AlgValue* v : entries)
        if (!v->is_rational()) return v->root();
    for (const auto& row : e.Q)
        for (const AlgValue& v : row)
            if (!v.is_rational()) return v.root();
    return nullptr;
}

bool roots_compatible(const RootPtr& a, const RootPtr& b) {
    if (!a || !b) return true;
    if (a == b) return true;
    return a->defining() == b->defining() && a->isolating().lo == b->isolating().lo &&
           a->isolating().hi == b->isolating().hi;
}

/// Divides the quadruple by its last exactly-nonzero entry, making exact
/// cross-field comparison entrywise.
Quad normalized_quad(const MoebiusAlg& m) {
    Quad q{m.a, m.b, m.c, m.d};
    for (int i = 3; i >= 0; --i) {
        if (!q[static_cast<size_t>(i)].is_zero()) {
            AlgValue pivot = q[static_cast<size_t>(i)];
            for (auto& v : q) v = v / pivot;
            return q;
        }
    }
    throw VerificationError("zero Moebius quadruple");
}

bool exact_same_element(const GroupElement& a, const GroupElement& b) {
    Quad qa = normalized_quad(a.phi), qb = normalized_quad(b.phi);
    for (size_t i = 0; i < 4; ++i)
        if (!qa[i].equals(qb[i])) return false;
    return true;
}

struct Pool {
    std::vector<GroupElement> elems;
    const CurveSpec* curve;
    bool complete_enum;

    IQuad quad_enclose(size_t idx, const Rational& width) const {
        const GroupElement& e = elems[idx];
        if (e.exact) {
            return {e.phi.a.enclose(width), e.phi.b.enclose(width), e.phi.c.enclose(width),
                    e.phi.d.enclose(width)};
        }
        // Chain: refine the parents until the product is tight enough.
        Rational w = width;
        while (true) {
            IQuad pa = quad_enclose(static_cast<size_t>(e.parent_a), w);
            IQuad pb = quad_enclose(static_cast<size_t>(e.parent_b), w);
            IQuad prod = {pa[0] * pb[0] + pa[1] * pb[2], pa[0] * pb[1] + pa[1] * pb[3],
                          pa[2] * pb[0] + pa[3] * pb[2], pa[2] * pb[1] + pa[3] * pb[3]};
            bool tight = true;
            for (const Interval& iv : prod) tight = tight && iv.width() <= width;
            if (tight) return prod;
            w /= 16;
        }
    }
};

bool quads_possibly_equal(const IQuad& a, const IQuad& b) {
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
            Interval m = a[i] * b[j] - a[j] * b[i];
            if (!m.contains_zero()) return false;
        }
    return true;
}

}  // namespace

GroupClosure group_closure(const std::vector<VerifiedSymmetry>& syms, const CurveSpec& curve,
                           int max_order) {
    Pool pool;
    pool.curve = &curve;
    // For plane curves the branch enumeration covers every symmetry class
    // (rotations and involutions), so a composite that interval-eliminates
    // all pool elements but one must equal that one.
    pool.complete_enum = curve.dim() == 2;

    GroupElement id;
    id.exact = true;
    id.identity = true;
    size_t n = static_cast<size_t>(curve.dim());
    id.Q.assign(n, std::vector<AlgValue>(n, AlgValue(Rational(0))));
    for (size_t i = 0; i < n; ++i) id.Q[i][i] = AlgValue(Rational(1));
    id.t.assign(n, AlgValue(Rational(0)));
    id.phi = MoebiusAlg{AlgValue(Rational(1)), AlgValue(Rational(0)), AlgValue(Rational(0)),
                        AlgValue(Rational(1))};
    pool.elems.push_back(std::move(id));

    std::deque<std::pair<size_t, size_t>> work;
    // Inserts the candidate if it is a new group element, returning its
    // index; returns nullopt if it identifies with an existing element.
    auto add_element = [&](GroupElement&& cand) -> std::optional<size_t> {
        bool any_opaque = std::any_of(pool.elems.begin(), pool.elems.end(),
                                      [](const GroupElement& e) { return !e.exact; });
        if (cand.exact) {
            for (size_t i = 0; i < pool.elems.size(); ++i)
                if (pool.elems[i].exact && exact_same_element(pool.elems[i], cand))
                    return std::nullopt;
            if (!any_opaque) {
                pool.elems.push_back(std::move(cand));
                return pool.elems.size() - 1;
            }
        }
        // Interval elimination against the pool entries not already decided
        // exactly. Distinct group elements separate under refinement; a
        // single surviving candidate is a certified match for plane curves,
        // where the branch enumeration lists the whole group.
        size_t cand_idx = pool.elems.size();
        bool cand_exact = cand.exact;
        pool.elems.push_back(std::move(cand));
        Rational w(1, 16);
        const int max_depth = 40;
        for (int depth = 0; depth < max_depth; ++depth, w /= 16) {
            IQuad cq = pool.quad_enclose(cand_idx, w);
            std::vector<size_t> candidates;
            for (size_t i = 0; i < cand_idx; ++i) {
                if (cand_exact && pool.elems[i].exact) continue;  // decided above
                if (quads_possibly_equal(cq, pool.quad_enclose(i, w))) candidates.push_back(i);
            }
            if (candidates.empty()) return cand_idx;  // proven new
            if (candidates.size() == 1 && pool.complete_enum) {
                pool.elems.pop_back();
                return std::nullopt;
            }
        }
        throw VerificationError(
            "closure: could not certify identification of a composite element; "
            "group exceeds the supported algebraic complexity");
    };

    for (const VerifiedSymmetry& s : syms) {
        GroupElement e;
        e.exact = true;
        e.Q = s.Q;
        e.t = s.t;
        e.phi = s.phi;
        if (auto idx = add_element(std::move(e))) {
            for (size_t i = 1; i < *idx; ++i) {
                work.emplace_back(i, *idx);
                work.emplace_back(*idx, i);
            }
            work.emplace_back(*idx, *idx);
        }
    }
    size_t input_count = pool.elems.size();

    while (!work.empty()) {
        auto [ia, ib] = work.front();
        work.pop_front();
        const GroupElement& a = pool.elems[ia];
        const GroupElement& b = pool.elems[ib];
        GroupElement c;
        RootPtr fa = field_of(a), fb = field_of(b);
        if (a.exact && b.exact && roots_compatible(fa, fb)) {
            c.exact = true;
            c.Q.assign(n, std::vector<AlgValue>(n, AlgValue(Rational(0))));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    AlgValue acc{Rational(0)};
                    for (size_t k = 0; k < n; ++k) acc = acc + a.Q[i][k] * b.Q[k][j];
                    c.Q[i][j] = acc;
                }
            c.t.assign(n, AlgValue(Rational(0)));
            for (size_t i = 0; i < n; ++i) {
                AlgValue acc = a.t[i];
                for (size_t k = 0; k < n; ++k) acc = acc + a.Q[i][k] * b.t[k];
                c.t[i] = acc;
            }
            c.phi = a.phi.compose(b.phi);
        } else {
            c.exact = false;
            c.parent_a = static_cast<long>(ia);
            c.parent_b = static_cast<long>(ib);
            // phi/Q/t unused for opaque elements; identification is by
            // intervals through the chain.
        }
        if (auto idx = add_element(std::move(c))) {
            if (pool.elems.size() > static_cast<size_t>(max_order) + 1)
                throw VerificationError("closure: group order bound exceeded");
            for (size_t i = 1; i < *idx; ++i) {
                work.emplace_back(i, *idx);
                work.emplace_back(*idx, i);
            }
            work.emplace_back(*idx, *idx);
        }
    }

    GroupClosure out;
    out.order = pool.elems.size();
    out.grew_beyond_input = pool.elems.size() > input_count;
    for (const GroupElement& e : pool.elems)
        if (!e.exact) ++out.opaque_count;
    out.elements = std::move(pool.elems);
    return out;
}

}  // namespace curvesym
