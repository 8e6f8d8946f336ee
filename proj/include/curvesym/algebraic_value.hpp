#pragma once

#include "curvesym/rational_function.hpp"
#include "curvesym/real_algebraic.hpp"

#include <memory>

namespace curvesym {

using RootPtr = std::shared_ptr<const RealAlgebraic>;

/// Defining polynomial of the value u(alpha)/v(alpha): the resultant
/// R(z) = Res_x(p(x), z*v(x) - u(x)) for p the defining polynomial of alpha,
/// computed fraction-free over Q[z]. Nonzero whenever v does not vanish on
/// every shared root; common roots of u and v are stripped from p first.
Poly norm_polynomial(const Poly& p, const Poly& u, const Poly& v);

/// A real number represented as u(alpha)/v(alpha) over one real algebraic
/// alpha, with v(alpha) != 0 checked exactly on construction. Values whose
/// representatives reduce to constants are normalized to plain rationals.
/// Arithmetic is defined between values over the same root (or rationals);
/// equality is decided exactly even across different roots.
class AlgValue {
public:
    AlgValue() : rational_(0) {}
    explicit AlgValue(Rational r) : rational_(std::move(r)) {}
    AlgValue(Poly u, Poly v, RootPtr root);

    static AlgValue of_root(const RootPtr& root) {
        return AlgValue(Poly::x(), Poly::one(), root);
    }
    static AlgValue of_ratfun(const RatFun& f, const RootPtr& root) {
        return AlgValue(f.num(), f.den(), root);
    }

    bool is_rational() const { return !root_; }
    const Rational& rational() const;  // requires is_rational()
    const RootPtr& root() const { return root_; }
    const Poly& rep_num() const { return num_; }
    const Poly& rep_den() const { return den_; }

    bool is_zero() const;
    int sign() const;

    AlgValue operator-() const;
    AlgValue operator+(const AlgValue& r) const;
    AlgValue operator-(const AlgValue& r) const;
    AlgValue operator*(const AlgValue& r) const;
    /// r must be nonzero.
    AlgValue operator/(const AlgValue& r) const;

    /// Exact equality, including across different roots (via norm polynomials).
    bool equals(const AlgValue& r) const;

    /// Encloses the value in an interval of width <= w.
    Interval enclose(const Rational& w) const;

    /// The value as a standalone real algebraic number.
    RealAlgebraic as_real_algebraic() const;

    double approx() const;

private:
    static void req_same_field(const AlgValue& a, const AlgValue& b);
    Rational rational_;  // valid when root_ is null
    Poly num_, den_;     // reduced mod root_->defining()
    RootPtr root_;
};

}  // namespace curvesym
