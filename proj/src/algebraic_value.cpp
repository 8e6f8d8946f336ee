#include "curvesym/algebraic_value.hpp"

#include <stdexcept>

namespace curvesym {

namespace {

/// Fraction-free (Bareiss) determinant of a square matrix over Q[z].
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly::one();
    int swaps = 0;
    Poly prev = Poly::one();
    for (size_t i = 0; i + 1 < n; ++i) {
        if (m[i][i].is_zero()) {
            size_t j = i + 1;
            while (j < n && m[j][i].is_zero()) ++j;
            if (j == n) return Poly::zero();
            std::swap(m[i], m[j]);
            ++swaps;
        }
        for (size_t r = i + 1; r < n; ++r) {
            for (size_t c = i + 1; c < n; ++c) {
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]).exact_div(prev);
            }
            m[r][i] = Poly::zero();
        }
        prev = m[i][i];
    }
    Poly det = m[n - 1][n - 1];
    return swaps % 2 ? -det : det;
}

bool same_root_object(const RootPtr& a, const RootPtr& b) {
    if (a == b) return true;
    return a->defining() == b->defining() && a->isolating().lo == b->isolating().lo &&
           a->isolating().hi == b->isolating().hi;
}

}  // namespace

Poly norm_polynomial(const Poly& p, const Poly& u, const Poly& v) {
    if (v.is_zero()) throw std::invalid_argument("norm_polynomial: zero denominator");
    Poly defining = p;
    Poly shared = poly_gcd(defining, poly_gcd(u, v));
    if (shared.degree() > 0) defining = defining.exact_div(shared);
    long n = defining.degree();
    long d = std::max(u.degree(), v.degree());
    if (d < 0) d = 0;
    if (n < 1) throw std::invalid_argument("norm_polynomial: constant defining polynomial");
    // Rows of the Sylvester matrix of defining(x) and z*v(x) - u(x) in x.
    auto ucoeff = [&](long i) { return i <= u.degree() ? u[static_cast<size_t>(i)] : Rational(0); };
    auto vcoeff = [&](long i) { return i <= v.degree() ? v[static_cast<size_t>(i)] : Rational(0); };
    size_t size = static_cast<size_t>(n + d);
    std::vector<std::vector<Poly>> m(size, std::vector<Poly>(size, Poly::zero()));
    for (long row = 0; row < d; ++row)
        for (long i = 0; i <= n; ++i)
            m[static_cast<size_t>(row)][static_cast<size_t>(row + i)] =
                Poly(defining[static_cast<size_t>(n - i)]);
    for (long row = 0; row < n; ++row)
        for (long i = 0; i <= d; ++i)
            m[static_cast<size_t>(d + row)][static_cast<size_t>(row + i)] =
                Poly{-ucoeff(d - i), vcoeff(d - i)};
    Poly r = bareiss_det(std::move(m));
    if (r.is_zero()) throw std::logic_error("norm_polynomial: vanishing resultant");
    return r;
}

AlgValue::AlgValue(Poly u, Poly v, RootPtr root) : rational_(0), root_(std::move(root)) {
    if (!root_) throw std::invalid_argument("AlgValue: null root");
    const Poly& p = root_->defining();
    num_ = u.divmod(p).second;
    den_ = v.divmod(p).second;
    if (den_.is_zero() || vanishes_at(den_, *root_))
        throw std::invalid_argument("AlgValue: denominator vanishes at the root");
    if (num_.is_constant() && den_.is_constant()) {
        rational_ = num_.constant_term() / den_.constant_term();
        root_.reset();
        num_ = Poly();
        den_ = Poly();
        return;
    }
    if (root_->is_rational()) {
        rational_ = num_.eval(*root_->exact_rational()) / den_.eval(*root_->exact_rational());
        root_.reset();
        num_ = Poly();
        den_ = Poly();
    }
}

const Rational& AlgValue::rational() const {
    if (root_) throw std::logic_error("AlgValue: not a rational value");
    return rational_;
}

bool AlgValue::is_zero() const {
    if (!root_) return rational_ == 0;
    return vanishes_at(num_, *root_);
}

int AlgValue::sign() const {
    if (!root_) return curvesym::sign(rational_);
    return sign_at(num_, *root_) * sign_at(den_, *root_);
}

AlgValue AlgValue::operator-() const {
    if (!root_) return AlgValue(-rational_);
    return AlgValue(-num_, den_, root_);
}

AlgValue AlgValue::operator+(const AlgValue& r) const {
    if (!root_ && !r.root_) return AlgValue(rational_ + r.rational_);
    if (!root_) return AlgValue(r.num_ + r.den_ * rational_, r.den_, r.root_);
    if (!r.root_) return AlgValue(num_ + den_ * r.rational_, den_, root_);
    req_same_field(*this, r);
    return AlgValue(num_ * r.den_ + r.num_ * den_, den_ * r.den_, root_);
}

AlgValue AlgValue::operator-(const AlgValue& r) const { return *this + (-r); }

AlgValue AlgValue::operator*(const AlgValue& r) const {
    if (!root_ && !r.root_) return AlgValue(rational_ * r.rational_);
    if (!root_) return AlgValue(r.num_ * rational_, r.den_, r.root_);
    if (!r.root_) return AlgValue(num_ * r.rational_, den_, root_);
    req_same_field(*this, r);
    return AlgValue(num_ * r.num_, den_ * r.den_, root_);
}

AlgValue AlgValue::operator/(const AlgValue& r) const {
    if (r.is_zero()) throw std::invalid_argument("AlgValue: division by zero");
    if (!r.root_) return *this * AlgValue(Rational(1) / r.rational_);
    AlgValue inv(r.den_, r.num_, r.root_);
    return *this * inv;
}

void AlgValue::req_same_field(const AlgValue& a, const AlgValue& b) {
    if (!same_root_object(a.root_, b.root_))
        throw std::logic_error("AlgValue: arithmetic across different roots");
}

bool AlgValue::equals(const AlgValue& r) const {
    if (!root_ && !r.root_) return rational_ == r.rational_;
    if (!root_) return r.equals(*this);
    if (!r.root_) {
        // u(a)/v(a) == c  iff  u - c*v vanishes at a.
        return vanishes_at(num_ - den_ * r.rational_, *root_);
    }
    if (same_root_object(root_, r.root_))
        return vanishes_at(num_ * r.den_ - r.num_ * den_, *root_);
    return same_number(as_real_algebraic(), r.as_real_algebraic());
}

Interval AlgValue::enclose(const Rational& w) const {
    if (!root_) return Interval::point(rational_);
    RealAlgebraic alpha = *root_;
    Rational rw = alpha.isolating().width();
    while (true) {
        Interval dv = eval_interval(den_, alpha.isolating());
        if (dv.sign() != 0) {
            Interval value = eval_interval(num_, alpha.isolating()) / dv;
            if (value.width() <= w) return value;
        }
        rw /= 2;
        alpha = refine_root(alpha, rw);
    }
}

RealAlgebraic AlgValue::as_real_algebraic() const {
    if (!root_) return RealAlgebraic::from_rational(rational_);
    Poly norm = norm_polynomial(root_->defining(), num_, den_);
    auto roots = isolate_real_roots(norm);
    // Identify which root of the norm polynomial this value is.
    Rational w = Rational(1);
    while (true) {
        Interval e = enclose(w);
        const RealAlgebraic* unique = nullptr;
        int overlaps = 0;
        for (const auto& cand : roots) {
            if (!e.disjoint(cand.isolating())) {
                ++overlaps;
                unique = &cand;
            }
        }
        if (overlaps == 1) return *unique;
        w /= 16;
    }
}

double AlgValue::approx() const {
    if (!root_) return to_double(rational_);
    return to_double(enclose(Rational(1, 1000000000)).mid());
}

}  // namespace curvesym
