#pragma once

// Internal helpers: dense integer polynomials used by the gcd and Sturm
// machinery to keep coefficient growth under control. Not part of the
// public surface.

#include "curvesym/polynomial.hpp"
#include "curvesym/rational.hpp"

#include <vector>

namespace curvesym::intpoly {

using IVec = std::vector<Int>;

inline void trim(IVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Int content(const IVec& v) {
    Int g = 0;
    for (const Int& c : v) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

inline void make_primitive(IVec& v) {
    Int g = content(v);
    if (g > 1)
        for (Int& c : v) c /= g;
}

/// Clears denominators and divides out the integer content; the sign of the
/// leading coefficient is preserved.
inline IVec primitive_int(const Poly& p) {
    Int l = 1;
    for (const Rational& c : p.coefficients()) l = lcm(l, den(c));
    IVec v(p.coefficients().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = num(p[i]) * (l / den(p[i]));
    make_primitive(v);
    return v;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline IVec prem(IVec a, const IVec& b) {
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    const Int& lb = b.back();
    for (long k = da - db; k >= 0; --k) {
        Int head = a[k + db];
        for (long i = 0; i < k + db; ++i) a[i] *= lb;
        if (head != 0)
            for (long i = 0; i < db; ++i) a[k + i] -= head * b[i];
        a[k + db] = 0;
    }
    trim(a);
    return a;
}

/// Partial pseudo-division: eliminates the top `steps` coefficients of a
/// against b in place (a becomes lc(b)^steps * a mod-chunk), preserving the
/// gcd up to content. Requires deg a >= deg b + steps.
inline void prem_steps(IVec& a, const IVec& b, long steps) {
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    const Int& lb = b.back();
    for (long s = 0; s < steps; ++s) {
        long k = da - db - s;
        Int head = a[k + db];
        for (long i = 0; i < k + db; ++i) a[i] *= lb;
        if (head != 0)
            for (long i = 0; i < db; ++i) a[k + i] -= head * b[i];
        a[k + db] = 0;
    }
    trim(a);
}

inline Poly to_poly(const IVec& v) {
    std::vector<Rational> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return Poly(std::move(c));
}

}  // namespace curvesym::intpoly
