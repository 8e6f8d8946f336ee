#pragma once

#include "curvesym/interval.hpp"
#include "curvesym/polynomial.hpp"

#include <optional>
#include <string>
#include <utility>

namespace curvesym {

/// Reduced rational function: gcd(num, den) = 1 and den monic (the scale is
/// folded into num). The zero function is 0/1.
class RatFun {
public:
    RatFun() : num_(), den_(Poly::one()) {}
    RatFun(Poly n, Poly d);
    explicit RatFun(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
    explicit RatFun(const Rational& c) : num_(Poly(c)), den_(Poly::one()) {}

    static RatFun variable() { return RatFun(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& r) const;
    RatFun operator-(const RatFun& r) const;
    RatFun operator*(const RatFun& r) const;
    /// r must be nonzero.
    RatFun operator/(const RatFun& r) const;
    RatFun operator*(const Rational& c) const { return *this * RatFun(c); }
    RatFun operator/(const Rational& c) const { return *this / RatFun(c); }

    bool operator==(const RatFun& r) const { return num_ == r.num_ && den_ == r.den_; }
    bool operator!=(const RatFun& r) const { return !(*this == r); }

    RatFun derivative() const;

    /// Value at t, or nullopt at a pole.
    std::optional<Rational> eval(const Rational& t) const;

    std::string to_string(const std::string& var = "t") const;

private:
    Poly num_, den_;
};

inline RatFun operator*(const Rational& c, const RatFun& f) { return f * c; }

/// p((n/d)(t)) written over the common clearing denominator d^m with
/// m = max(deg num, deg den) of the host; used for substituting a Moebius
/// map into a component. Returns (sum_k p_k n^k d^(m-k), d^m) unreduced.
std::pair<Poly, Poly> compose_cleared(const Poly& p, const Poly& n, const Poly& d, long m);

/// Full substitution x(phi(t)) for x = p/q and phi = n/d, reduced.
RatFun compose_moebius(const RatFun& x, const Poly& n, const Poly& d);

}  // namespace curvesym
