#pragma once

#include "curvesym/polynomial.hpp"
#include "curvesym/rational_function.hpp"

#include <vector>

namespace curvesym {

/// Polynomial in t whose coefficients are polynomials in b (an element of
/// Q[b][t]), stored dense and ascending in t. Used when substituting a
/// one-parameter Moebius family into a parametrization and clearing
/// denominators: no rational-function-in-b arithmetic is left by design.
class BPoly {
public:
    BPoly() = default;
    explicit BPoly(std::vector<Poly> tcoeffs) : c_(std::move(tcoeffs)) { normalize(); }
    /// Constant-in-t embedding of a polynomial in b.
    static BPoly of_b(Poly pb);
    /// Embedding of a polynomial in t (coefficients constant in b).
    static BPoly of_t(const Poly& pt);
    /// Outer product pb(b) * pt(t).
    static BPoly outer(const Poly& pb, const Poly& pt);

    bool is_zero() const { return c_.empty(); }
    long tdeg() const { return static_cast<long>(c_.size()) - 1; }
    const Poly& tcoeff(size_t k) const { return c_[k]; }
    const std::vector<Poly>& tcoeffs() const { return c_; }

    BPoly operator-() const;
    BPoly operator+(const BPoly& r) const;
    BPoly operator-(const BPoly& r) const;
    BPoly operator*(const BPoly& r) const;
    BPoly operator*(const Poly& pb) const;  // scale by a polynomial in b

    bool operator==(const BPoly& r) const { return c_ == r.c_; }

    /// Substitutes a rational value for b, leaving a polynomial in t.
    Poly eval_b(const Rational& b) const;
    /// Substitutes a rational value for t, leaving a polynomial in b.
    Poly eval_t(const Rational& t) const;

private:
    void normalize();
    std::vector<Poly> c_;
};

/// x(N/D) for component x = p/q, cleared by D^m with m = max(deg p, deg q):
/// returns (sum_k p_k N^k D^(m-k), sum_k q_k N^k D^(m-k)).
std::pair<BPoly, BPoly> compose_component(const RatFun& x, const BPoly& n, const BPoly& d);

}  // namespace curvesym
