#include "curvesym/rational_function.hpp"

#include <stdexcept>

namespace curvesym {

RatFun::RatFun(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        den_ = den_ / lead;
        num_ = num_ / lead;
    }
}

RatFun RatFun::operator-() const {
    RatFun out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFun RatFun::operator+(const RatFun& r) const {
    return RatFun(num_ * r.den_ + r.num_ * den_, den_ * r.den_);
}

RatFun RatFun::operator-(const RatFun& r) const {
    return RatFun(num_ * r.den_ - r.num_ * den_, den_ * r.den_);
}

RatFun RatFun::operator*(const RatFun& r) const { return RatFun(num_ * r.num_, den_ * r.den_); }

RatFun RatFun::operator/(const RatFun& r) const {
    if (r.is_zero()) throw std::invalid_argument("RatFun: division by zero");
    return RatFun(num_ * r.den_, den_ * r.num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<Rational> RatFun::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (d == 0) return std::nullopt;
    return num_.eval(t) / d;
}

std::string RatFun::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::pair<Poly, Poly> compose_cleared(const Poly& p, const Poly& n, const Poly& d, long m) {
    std::vector<Poly> dpow(static_cast<size_t>(m) + 1);
    dpow[0] = Poly::one();
    for (long i = 1; i <= m; ++i) dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * d;
    Poly acc, npow = Poly::one();
    for (long k = 0; k <= m; ++k) {
        if (k <= p.degree() && p[static_cast<size_t>(k)] != 0)
            acc = acc + npow * dpow[static_cast<size_t>(m - k)] * p[static_cast<size_t>(k)];
        if (k < m) npow = npow * n;
    }
    return {acc, dpow[static_cast<size_t>(m)]};
}

RatFun compose_moebius(const RatFun& x, const Poly& n, const Poly& d) {
    long m = std::max(x.num().degree(), x.den().degree());
    if (m < 0) return x;
    std::vector<Poly> dpow(static_cast<size_t>(m) + 1);
    dpow[0] = Poly::one();
    for (long i = 1; i <= m; ++i) dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * d;
    Poly pn, pd, npow = Poly::one();
    for (long k = 0; k <= m; ++k) {
        if (k <= x.num().degree() && x.num()[static_cast<size_t>(k)] != 0)
            pn = pn + npow * dpow[static_cast<size_t>(m - k)] * x.num()[static_cast<size_t>(k)];
        if (k <= x.den().degree() && x.den()[static_cast<size_t>(k)] != 0)
            pd = pd + npow * dpow[static_cast<size_t>(m - k)] * x.den()[static_cast<size_t>(k)];
        if (k < m) npow = npow * n;
    }
    return RatFun(std::move(pn), std::move(pd));
}

}  // namespace curvesym
