#pragma once

#include "curvesym/interval.hpp"
#include "curvesym/polynomial.hpp"

#include <optional>
#include <vector>

namespace curvesym {

/// A real algebraic number: a squarefree monic defining polynomial together
/// with an isolating interval containing exactly one of its real roots.
/// Rational numbers additionally carry their exact value and a degenerate
/// isolating interval once refined.
class RealAlgebraic {
public:
    RealAlgebraic(Poly defining, Interval isolating,
                  std::optional<Rational> exact = std::nullopt);

    static RealAlgebraic from_rational(const Rational& r);

    const Poly& defining() const { return defining_; }
    const Interval& isolating() const { return isolating_; }
    const std::optional<Rational>& exact_rational() const { return exact_; }
    bool is_rational() const { return exact_.has_value(); }

    Rational approx() const { return isolating_.mid(); }

private:
    Poly defining_;
    Interval isolating_;
    std::optional<Rational> exact_;
};

/// Number of distinct real roots of squarefree p in (lo, hi]. Endpoints that
/// hit roots are resolved by deterministic dyadic perturbation certified with
/// a derivative sign interval; a degenerate interval [r, r] counts membership
/// of r. p must be squarefree and nonzero.
int sturm_count(const Poly& p, const Interval& iv);

/// All distinct real roots of p (nonzero), sorted ascending, with pairwise
/// disjoint isolating intervals. Rational roots are detected exactly via
/// continued-fraction screening against the denominator bound of the
/// rational-root theorem and carry exact_rational; the rest are certified
/// irrational.
std::vector<RealAlgebraic> isolate_real_roots(const Poly& p);

/// Same number, isolating interval of width at most `width`. Idempotent.
RealAlgebraic refine_root(const RealAlgebraic& alpha, const Rational& width);

/// Exact g(alpha) = 0 test: reduces to a Sturm count of gcd(g, defining).
bool vanishes_at(const Poly& g, const RealAlgebraic& alpha);

/// Exact sign of g(alpha) in {-1, 0, +1}.
int sign_at(const Poly& g, const RealAlgebraic& alpha);

/// Exact equality of two real algebraic numbers.
bool same_number(const RealAlgebraic& a, const RealAlgebraic& b);

/// Exact comparison helper: sign of (alpha - r).
int compare_to_rational(const RealAlgebraic& alpha, const Rational& r);

}  // namespace curvesym
