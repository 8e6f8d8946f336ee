#include "curvesym/interval.hpp"

#include <algorithm>

namespace curvesym {

Interval Interval::operator*(const Interval& r) const {
    Rational a = lo * r.lo, b = lo * r.hi, c = hi * r.lo, d = hi * r.hi;
    return Interval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

Interval Interval::operator/(const Interval& r) const {
    if (r.contains_zero()) throw std::domain_error("interval division through zero");
    Interval inv(Rational(1) / r.hi, Rational(1) / r.lo);
    return *this * inv;
}

Interval eval_interval(const Poly& p, const Interval& iv) {
    if (p.is_zero()) return Interval(Rational(0), Rational(0));
    Interval acc = Interval::point(p.leading());
    for (long i = p.degree() - 1; i >= 0; --i) {
        acc = acc * iv + Interval::point(p[static_cast<size_t>(i)]);
    }
    return acc;
}

}  // namespace curvesym
