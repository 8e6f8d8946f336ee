#include "curvesym/polynomial.hpp"

#include "int_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvesym {

void Poly::normalize() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Poly Poly::monomial(const Rational& c, size_t k) {
    if (c == 0) return Poly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
}

const Rational& Poly::leading() const {
    if (coeff_.empty()) throw std::logic_error("leading() of zero polynomial");
    return coeff_.back();
}

Rational Poly::eval(const Rational& t) const {
    if (coeff_.empty()) return Rational(0);
    // Integer Horner: p(u/v) = sum a_k u^k v^(n-k) / (scale * v^n), with a
    // single canonicalization at the end.
    Int scale = 1;
    for (const Rational& c : coeff_) scale = lcm(scale, den(c));
    const Int u = num(t), v = den(t);
    long n = degree();
    Int acc = num(coeff_.back()) * (scale / den(coeff_.back()));
    Int vpow = 1;
    for (long k = n - 1; k >= 0; --k) {
        vpow *= v;
        const Rational& c = coeff_[static_cast<size_t>(k)];
        acc = acc * u + num(c) * (scale / den(c)) * vpow;
    }
    return make_rational(acc, scale * vpow);
}

int Poly::sign_at_rational(const Rational& t) const {
    if (coeff_.empty()) return 0;
    Int scale = 1;
    for (const Rational& c : coeff_) scale = lcm(scale, den(c));
    const Int u = num(t), v = den(t);
    long n = degree();
    Int acc = num(coeff_.back()) * (scale / den(coeff_.back()));
    Int vpow = 1;
    for (long k = n - 1; k >= 0; --k) {
        vpow *= v;
        const Rational& c = coeff_[static_cast<size_t>(k)];
        acc = acc * u + num(c) * (scale / den(c)) * vpow;
    }
    return acc.sign();  // scale and v^n are positive
}

Poly Poly::derivative() const {
    if (coeff_.size() <= 1) return Poly();
    std::vector<Rational> v(coeff_.size() - 1);
    for (size_t i = 1; i < coeff_.size(); ++i) v[i - 1] = coeff_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Rational> v(coeff_.size());
    for (size_t i = 0; i < coeff_.size(); ++i) v[i] = -coeff_[i];
    return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<Rational> v(std::max(coeff_.size(), rhs.coeff_.size()), Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) v[i] = coeff_[i];
    for (size_t i = 0; i < rhs.coeff_.size(); ++i) v[i] += rhs.coeff_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& rhs) const {
    std::vector<Rational> v(std::max(coeff_.size(), rhs.coeff_.size()), Rational(0));
    for (size_t i = 0; i < coeff_.size(); ++i) v[i] = coeff_[i];
    for (size_t i = 0; i < rhs.coeff_.size(); ++i) v[i] -= rhs.coeff_[i];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly();
    // Integer convolution with one canonicalization per output coefficient;
    // much cheaper than per-step mpq arithmetic for the large operands the
    // elimination produces.
    Int la = 1, lb = 1;
    for (const Rational& c : coeff_) la = lcm(la, den(c));
    for (const Rational& c : rhs.coeff_) lb = lcm(lb, den(c));
    std::vector<Int> a(coeff_.size()), b(rhs.coeff_.size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = num(coeff_[i]) * (la / den(coeff_[i]));
    for (size_t i = 0; i < b.size(); ++i) b[i] = num(rhs.coeff_[i]) * (lb / den(rhs.coeff_[i]));
    std::vector<Int> conv(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
    }
    Int scale = la * lb;
    std::vector<Rational> v(conv.size());
    for (size_t i = 0; i < conv.size(); ++i) v[i] = make_rational(conv[i], scale);
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    std::vector<Rational> v(coeff_.size());
    for (size_t i = 0; i < coeff_.size(); ++i) v[i] = coeff_[i] * c;
    return Poly(std::move(v));
}

Poly Poly::operator/(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("division by zero rational");
    return *this * (Rational(1) / c);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& rhs) const {
    if (rhs.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (degree() < rhs.degree()) return {Poly(), *this};
    std::vector<Rational> rem = coeff_;
    std::vector<Rational> quo(degree() - rhs.degree() + 1, Rational(0));
    const Rational& lead = rhs.leading();
    for (long k = degree() - rhs.degree(); k >= 0; --k) {
        Rational factor = rem[k + rhs.degree()] / lead;
        quo[k] = factor;
        if (factor == 0) continue;
        for (long i = 0; i <= rhs.degree(); ++i) rem[k + i] -= factor * rhs[i];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& rhs) const {
    auto [q, r] = divmod(rhs);
    if (!r.is_zero()) throw std::logic_error("exact_div: non-exact division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this / leading();
}

Poly Poly::shifted(const Rational& shift) const { return compose(Poly{shift, Rational(1)}); }

Poly Poly::reversed() const {
    std::vector<Rational> v(coeff_.rbegin(), coeff_.rend());
    return Poly(std::move(v));
}

Poly Poly::scaled_arg(const Rational& c) const {
    std::vector<Rational> v = coeff_;
    Rational power(1);
    for (size_t i = 1; i < v.size(); ++i) {
        power *= c;
        v[i] *= power;
    }
    return Poly(std::move(v));
}

Poly Poly::compose(const Poly& q) const {
    Poly acc;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * q + Poly(*it);
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        const Rational& c = coeff_[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational a = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        bool unit = (a == 1) && i > 0;
        if (!unit) out += curvesym::to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    using intpoly::IVec;
    IVec a = intpoly::primitive_int(p), b = intpoly::primitive_int(q);
    if (a.size() < b.size()) std::swap(a, b);
    // Unbalanced degrees: a full pseudo-remainder would scale by lc^(gap+1);
    // eliminate in small chunks, stripping content in between.
    while (a.size() > b.size() + 8) {
        intpoly::prem_steps(a, b, 8);
        intpoly::make_primitive(a);
        if (a.empty()) return intpoly::to_poly(b).monic();
        if (a.size() < b.size()) std::swap(a, b);
    }
    // Subresultant PRS: pseudo-remainders divided by the predicted factor
    // g*h^delta, which controls growth without per-step content gcds.
    Int g = 1, h = 1;
    while (true) {
        long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
        IVec r = intpoly::prem(a, b);
        if (r.empty()) break;
        Int divisor = g * pow(h, static_cast<unsigned>(delta));
        for (Int& c : r) c /= divisor;
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            Int gd = pow(g, static_cast<unsigned>(delta));
            Int hd = pow(h, static_cast<unsigned>(delta - 1));
            h = gd / hd;
        }
        if (b.size() == 1) return Poly::one();
    }
    intpoly::make_primitive(b);
    std::vector<Rational> v(b.size());
    for (size_t i = 0; i < b.size(); ++i) v[i] = make_rational(b[i], b.back());
    return Poly(std::move(v));
}

Poly poly_lcm(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    return (p * q).exact_div(poly_gcd(p, q)).monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
    if (p.degree() == 0) return Poly::one();
    Poly g = poly_gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

Poly content_gcd(const std::vector<Poly>& ps) {
    Poly g;
    for (const Poly& p : ps) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : poly_gcd(g, p);
        if (g.is_one()) return g;
    }
    if (g.is_zero()) throw std::invalid_argument("content_gcd: all entries zero");
    return g;
}

std::optional<std::pair<Rational, Poly>> square_decompose(const Poly& p) {
    if (p.is_zero() || p.leading() <= 0)
        throw std::invalid_argument("square_decompose: need nonzero p with positive leading coefficient");
    if (p.degree() % 2 != 0) return std::nullopt;
    Rational c = p.leading();
    Poly m = p.monic();
    long k = p.degree() / 2;
    std::vector<Rational> s(k + 1, Rational(0));
    s[k] = 1;
    // Match coefficients of x^(2k-j) descending; each determines s[k-j].
    for (long j = 1; j <= k; ++j) {
        Rational acc(0);
        for (long i = k - j + 1; i < k; ++i) {
            long l = 2 * k - j - i;
            if (l <= k) acc += s[i] * s[l];
        }
        s[k - j] = (m[2 * k - j] - acc) / 2;
    }
    Poly root(std::move(s));
    if (root * root != m) return std::nullopt;
    return std::make_pair(c, root);
}

Rational resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    long dp = p.degree(), dq = q.degree();
    if (dp == 0) {
        Rational r(1);
        for (long i = 0; i < dq; ++i) r *= p[0];
        return r;
    }
    if (dq == 0) {
        Rational r(1);
        for (long i = 0; i < dp; ++i) r *= q[0];
        return r;
    }
    size_t n = static_cast<size_t>(dp + dq);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (long row = 0; row < dq; ++row)
        for (long i = 0; i <= dp; ++i) m[row][row + i] = p[dp - i];
    for (long row = 0; row < dp; ++row)
        for (long i = 0; i <= dq; ++i) m[dq + row][row + i] = q[dq - i];
    // Gaussian elimination over Q, tracking the determinant.
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (size_t ccol = col; ccol < n; ++ccol) m[r][ccol] -= f * m[col][ccol];
        }
    }
    return det;
}

}  // namespace curvesym
