#include "curvesym/bpoly.hpp"

#include <algorithm>

namespace curvesym {

void BPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BPoly BPoly::of_b(Poly pb) {
    if (pb.is_zero()) return BPoly();
    return BPoly(std::vector<Poly>{std::move(pb)});
}

BPoly BPoly::of_t(const Poly& pt) {
    std::vector<Poly> v;
    v.reserve(pt.coefficients().size());
    for (const Rational& c : pt.coefficients()) v.emplace_back(c);
    return BPoly(std::move(v));
}

BPoly BPoly::outer(const Poly& pb, const Poly& pt) {
    if (pb.is_zero() || pt.is_zero()) return BPoly();
    std::vector<Poly> v;
    v.reserve(pt.coefficients().size());
    for (const Rational& c : pt.coefficients()) v.push_back(pb * c);
    return BPoly(std::move(v));
}

BPoly BPoly::operator-() const {
    std::vector<Poly> v;
    v.reserve(c_.size());
    for (const Poly& p : c_) v.push_back(-p);
    return BPoly(std::move(v));
}

BPoly BPoly::operator+(const BPoly& r) const {
    std::vector<Poly> v(std::max(c_.size(), r.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < r.c_.size(); ++i) v[i] = v[i] + r.c_[i];
    return BPoly(std::move(v));
}

BPoly BPoly::operator-(const BPoly& r) const { return *this + (-r); }

BPoly BPoly::operator*(const BPoly& r) const {
    if (is_zero() || r.is_zero()) return BPoly();
    std::vector<Poly> v(c_.size() + r.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < r.c_.size(); ++j) {
            if (r.c_[j].is_zero()) continue;
            v[i + j] = v[i + j] + c_[i] * r.c_[j];
        }
    }
    return BPoly(std::move(v));
}

BPoly BPoly::operator*(const Poly& pb) const {
    if (pb.is_zero() || is_zero()) return BPoly();
    std::vector<Poly> v;
    v.reserve(c_.size());
    for (const Poly& p : c_) v.push_back(p * pb);
    return BPoly(std::move(v));
}

Poly BPoly::eval_b(const Rational& b) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const Poly& p : c_) v.push_back(p.eval(b));
    return Poly(std::move(v));
}

Poly BPoly::eval_t(const Rational& t) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * Poly(t) + *it;
    return acc;
}

std::pair<BPoly, BPoly> compose_component(const RatFun& x, const BPoly& n, const BPoly& d) {
    long m = std::max(x.num().degree(), x.den().degree());
    if (m < 0) m = 0;
    std::vector<BPoly> dpow(static_cast<size_t>(m) + 1);
    dpow[0] = BPoly::of_t(Poly::one());
    for (long i = 1; i <= m; ++i) dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * d;
    BPoly pn, pd, npow = BPoly::of_t(Poly::one());
    for (long k = 0; k <= m; ++k) {
        if (k <= x.num().degree() && x.num()[static_cast<size_t>(k)] != 0) {
            Poly cb(x.num()[static_cast<size_t>(k)]);
            pn = pn + npow * dpow[static_cast<size_t>(m - k)] * cb;
        }
        if (k <= x.den().degree() && x.den()[static_cast<size_t>(k)] != 0) {
            Poly cb(x.den()[static_cast<size_t>(k)]);
            pd = pd + npow * dpow[static_cast<size_t>(m - k)] * cb;
        }
        if (k < m) npow = npow * n;
    }
    return {pn, pd};
}

}  // namespace curvesym
