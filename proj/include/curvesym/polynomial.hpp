#pragma once

#include "curvesym/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvesym {

/// Dense univariate polynomial over the rationals, coefficients stored
/// ascending. The zero polynomial has an empty coefficient list; otherwise
/// the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending) : coeff_(ascending) { normalize(); }
    explicit Poly(std::vector<Rational> ascending) : coeff_(std::move(ascending)) { normalize(); }
    explicit Poly(const Rational& constant) : coeff_{constant} { normalize(); }
    explicit Poly(long constant) : coeff_{Rational(constant)} { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    /// c * x^k
    static Poly monomial(const Rational& c, size_t k);
    /// The variable itself.
    static Poly x() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return coeff_.size() == 1 && coeff_[0] == 1; }
    bool is_constant() const { return coeff_.size() <= 1; }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }

    const Rational& operator[](size_t i) const { return coeff_[i]; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    const Rational& leading() const;
    Rational constant_term() const { return coeff_.empty() ? Rational(0) : coeff_[0]; }

    Rational eval(const Rational& t) const;
    /// Sign of p(t), via integer Horner (no value materialized).
    int sign_at_rational(const Rational& t) const;

    Poly derivative() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& c) const;
    Poly operator/(const Rational& c) const;

    bool operator==(const Poly& rhs) const { return coeff_ == rhs.coeff_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Quotient and remainder over Q; rhs must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& rhs) const;
    /// Exact quotient; throws if rhs does not divide exactly.
    Poly exact_div(const Poly& rhs) const;
    bool divides(const Poly& divisor_candidate) const = delete;

    Poly monic() const;
    /// p(t) -> p(t + shift)
    Poly shifted(const Rational& shift) const;
    /// t^deg * p(1/t): coefficient reversal.
    Poly reversed() const;
    /// p(c * t)
    Poly scaled_arg(const Rational& c) const;
    /// Composition p(q(t)).
    Poly compose(const Poly& q) const;

    /// Canonical rendering, ascending terms: "1 - 2*t + t^2".
    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rational> coeff_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

/// Monic gcd via primitive PRS over the integers. gcd(p, 0) = monic(p),
/// gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

Poly poly_lcm(const Poly& p, const Poly& q);

/// monic(p / gcd(p, p')); same real roots as p, all simple. p must be nonzero.
Poly squarefree_part(const Poly& p);

/// Monic gcd of every entry; at least one entry must be nonzero.
Poly content_gcd(const std::vector<Poly>& ps);

/// Decomposes p = c * s^2 with c a positive rational and s monic, if such a
/// decomposition exists over Q. Requires a nonzero p with positive leading
/// coefficient.
std::optional<std::pair<Rational, Poly>> square_decompose(const Poly& p);

/// Resultant of p and q via the Sylvester matrix (fraction-free elimination).
Rational resultant(const Poly& p, const Poly& q);

}  // namespace curvesym
