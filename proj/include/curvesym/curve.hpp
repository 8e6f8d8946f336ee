#pragma once

#include "curvesym/algebraic_value.hpp"
#include "curvesym/bpoly.hpp"
#include "curvesym/rational_function.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace curvesym {

/// Rational-coefficient Moebius transformation (a t + b)/(c t + d).
struct MoebiusQ {
    Rational a{1}, b{0}, c{0}, d{1};

    Rational delta() const { return a * d - b * c; }
    bool is_identity() const { return b == 0 && c == 0 && a == d && a != 0; }
    bool is_affine() const { return c == 0; }

    MoebiusQ inverse() const { return {d, -b, -c, a}; }
    /// this after other: (this o other)(t) = this(other(t)).
    MoebiusQ compose(const MoebiusQ& other) const;
    RatFun apply(const RatFun& x) const;  // x(phi(t))
    std::optional<Rational> eval(const Rational& t) const;

    std::string to_string() const;
};

/// Thrown for inputs the method rejects (degenerate or improper curves,
/// failed general-position search).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency failures of the verification layer.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CurveSpec {
public:
    CurveSpec(int dim, std::vector<RatFun> components, std::string name = "");

    int dim() const { return dim_; }
    const std::vector<RatFun>& components() const { return comp_; }
    const RatFun& component(size_t i) const { return comp_[i]; }
    const std::string& name() const { return name_; }

    /// Largest degree appearing in the components; bounds rotation orders.
    long degree_bound() const;

    /// x(u(t)) as a new curve.
    CurveSpec reparam(const MoebiusQ& u) const;
    /// x(1/t).
    CurveSpec inverted_param() const;

    std::optional<std::vector<Rational>> eval(const Rational& t) const;

private:
    int dim_;
    std::vector<RatFun> comp_;
    std::string name_;
};

struct HodographData {
    std::vector<RatFun> d1, d2;
    std::vector<RatFun> cross12;  // 3 entries; plane curves embedded with z = 0
    RatFun norm1sq, dot12, cross12sq, kappa_sq;
};

HodographData hodograph(const CurveSpec& curve);

RatFun curvature_sq(const CurveSpec& curve);

enum class Degeneracy { ok, line, circle };
Degeneracy is_degenerate(const CurveSpec& curve);

/// All six general-position predicates (conditions at 0 and at infinity).
/// Returns the name of the first failing predicate, or nullopt when the
/// curve is in general position.
std::optional<std::string> general_position_failure(const CurveSpec& curve);

/// Deterministic search for a reparametrization u with x(u(t)) in general
/// position: affine shifts t + r first, full Moebius maps (p t + q)/(t + r)
/// after. `skip_successes` passes over that many working candidates, giving
/// callers a deterministic "next candidate" for retries. Throws InputError
/// on exhaustion.
std::pair<MoebiusQ, CurveSpec> general_position_reparam(const CurveSpec& curve,
                                                        int max_candidates = 200,
                                                        int skip_successes = 0);

enum class Properness { proper, improper, inconclusive };
/// Random-fiber gcd heuristic with a fixed seed.
Properness properness_check(const CurveSpec& curve, int trials = 5);

struct PHData {
    Rational c;        // positive; ||x'||^2 = c * (s_num/s_den)^2
    Poly s_num, s_den; // monic
};
/// Recognizes ||x'||^2 = c * sigma^2 with sigma rational and c a positive
/// rational constant; the constant need not be a perfect square since it
/// cancels wherever sigma is used.
std::optional<PHData> ph_sigma(const CurveSpec& curve);

/// Composition x_i((N(b,t))/(D(b,t))) for every component, cleared into
/// Q[b][t] pairs.
std::vector<std::pair<BPoly, BPoly>> compose_all(const CurveSpec& curve, const BPoly& n,
                                                 const BPoly& d);

/// Moebius map with real algebraic coefficients (a certificate at one root).
struct MoebiusAlg {
    AlgValue a, b, c, d;

    AlgValue delta() const { return a * d - b * c; }
    MoebiusAlg compose(const MoebiusAlg& other) const;
    MoebiusAlg inverse_up_to_scale() const { return {d, -b, -c, a}; }
    bool is_identity() const;
    /// Projective equality of coefficient quadruples.
    bool same_map(const MoebiusAlg& other) const;
};

/// Smallest k <= bound with phi^k = id, or nullopt. Exact matrix powers of
/// polynomial representatives reduced modulo the defining polynomial.
std::optional<int> moebius_order(const MoebiusAlg& phi, int bound);

}  // namespace curvesym
