#pragma once

#include "curvesym/polynomial.hpp"
#include "curvesym/rational.hpp"

#include <stdexcept>

namespace curvesym {

/// Closed interval with exact rational endpoints.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }
    static Interval point(const Rational& r) { return Interval(r, r); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool disjoint(const Interval& other) const { return hi < other.lo || other.hi < lo; }

    /// 0 if the interval straddles (or touches) zero, otherwise the common sign.
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    Interval operator-() const { return Interval(-hi, -lo); }
    Interval operator+(const Interval& r) const { return Interval(lo + r.lo, hi + r.hi); }
    Interval operator-(const Interval& r) const { return Interval(lo - r.hi, hi - r.lo); }
    Interval operator*(const Interval& r) const;
    /// Requires r to exclude zero.
    Interval operator/(const Interval& r) const;
    Interval hull(const Interval& r) const {
        return Interval(lo < r.lo ? lo : r.lo, hi > r.hi ? hi : r.hi);
    }
};

/// Horner evaluation of p over an interval; the result encloses p([iv]).
Interval eval_interval(const Poly& p, const Interval& iv);

}  // namespace curvesym
