#pragma once

#include "curvesym/curve.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace curvesym {

enum class Branch { involution_d1, plane_rotation_d1, ph_rotation_d1, d0 };

std::string branch_label(Branch branch, int det_sign, int sigma_sign);

/// Signals that the current reparametrization is unusable for a branch
/// derivation and the next general-position candidate should be tried.
struct RetryReparam : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One-parameter family of Moebius transformations: for d = 1 branches
/// phi_b(t) = (a(b) t + b)/(c(b) t + 1); the d = 0 branch is carried in the
/// tilde parameters, phi(t) = (b~ t + a~(b~))/t with a~ stored in a_of_b.
struct ParamFamily {
    Branch branch = Branch::involution_d1;
    int d = 1;
    int det_sign = 1;    // third-column sign of Q (3D involutions and d0)
    int sigma_sign = 1;  // sign of Delta on the PH branch
    RatFun a_of_b, c_of_b, delta_of_b;
    Poly excluded_b = Poly::one();  // family undefined or non-invertible here

    void exclude(const Poly& factor);
};

/// Q(b) and t(b) as exact rational functions of the family parameter.
struct IsometryFamily {
    std::vector<std::vector<RatFun>> Q;
    std::vector<RatFun> t;
};

struct CandidateSet {
    Poly raw_content;          // content gcd of the cleared identity system
    Poly P;                    // stripped and squarefree candidate polynomial
    std::vector<Poly> system;  // the b-coefficient system, kept for re-verification
    std::vector<RealAlgebraic> roots;
};

/// A root that survived every exact check, with its certificates.
struct VerifiedSymmetry {
    Branch branch;
    int det_sign = 1;
    int sigma_sign = 1;
    RootPtr b_star;
    MoebiusAlg phi;
    std::vector<std::vector<AlgValue>> Q;
    std::vector<AlgValue> t;
    int dim = 2;
};

/// Numerator of kappa^2(b) - kappa^2(0) cleared: a necessary condition on b
/// for every symmetry whose Moebius transformation has d != 0.
Poly curvature_prefilter(const CurveSpec& curve);

ParamFamily derive_involution_family(const CurveSpec& curve, int det_sign = 1);
ParamFamily derive_plane_rotation_family(const CurveSpec& curve);
ParamFamily derive_ph_rotation_family(const CurveSpec& curve, const PHData& ph, int sigma_sign);
ParamFamily derive_d0_family(const CurveSpec& curve, int det_sign = 1);

/// Extends family.excluded_b with the denominators of Q and t.
IsometryFamily build_isometry_family(const CurveSpec& curve, ParamFamily& family);

/// Substitutes the families into the functional identity, clears
/// denominators, and reduces the coefficient system to the candidate
/// polynomial P. `prefilter` refines d != 0 branches (pass the squarefree
/// curvature condition) and is ignored for the d = 0 branch.
CandidateSet candidate_polynomial(const CurveSpec& curve, const ParamFamily& family,
                                  const IsometryFamily& iso,
                                  const std::optional<Poly>& prefilter);

/// Isolates the real roots of P and runs every exact check per root.
std::vector<VerifiedSymmetry> solve_candidates(const CurveSpec& curve, const ParamFamily& family,
                                               const IsometryFamily& iso, CandidateSet& cands);

bool same_symmetry(const VerifiedSymmetry& a, const VerifiedSymmetry& b);

bool is_involution(const VerifiedSymmetry& s);

inline Rational default_refine_width() { return Rational(Int(1), Int("1000000000000")); }

struct DetectOptions {
    enum class BranchFilter { all, involutions, rotations };
    BranchFilter branches = BranchFilter::all;
    bool closure = false;
    bool skip_properness = false;
    Rational refine_width = default_refine_width();
    std::optional<MoebiusQ> reparam_override;
    int max_reparam_candidates = 200;
    int properness_trials = 5;
    int max_group_order = 64;
};

struct BranchRun {
    std::string label;
    Branch branch;
    int det_sign = 1;
    int sigma_sign = 1;
    bool skipped_by_prefilter = false;
    Poly P;
    Poly raw_content;
    std::vector<Poly> system;
    size_t root_count = 0;
    std::vector<VerifiedSymmetry> found;  // nontrivial, verified
};

struct DetectionResult {
    CurveSpec original;
    CurveSpec working;  // after the general-position reparametrization
    MoebiusQ reparam;
    Properness properness = Properness::inconclusive;
    bool is_ph = false;
    bool rotations_complete = true;
    std::vector<BranchRun> branches;
    std::vector<VerifiedSymmetry> symmetries;  // deduped union, deterministic order
};

DetectionResult detect_all(const CurveSpec& curve, const DetectOptions& options = {});

/// Element of the symmetry group during closure. Exact elements carry
/// single-field certificates; opaque ones are composition chains identified
/// through refinable interval enclosures.
struct GroupElement {
    bool exact = true;
    bool identity = false;
    std::vector<std::vector<AlgValue>> Q;
    std::vector<AlgValue> t;
    MoebiusAlg phi;
    long parent_a = -1, parent_b = -1;  // set for opaque chain elements
};

struct GroupClosure {
    size_t order = 0;  // group order, identity included
    bool grew_beyond_input = false;
    size_t opaque_count = 0;
    std::vector<GroupElement> elements;  // the full group, element 0 = identity
};

/// Closes the verified symmetries under composition. Every composite of
/// symmetries is itself a symmetry, so membership testing is the whole job:
/// exact (projective quadruple) comparison whenever representations allow,
/// interval elimination otherwise, certified for plane curves by branch
/// completeness. Throws VerificationError if the group exceeds `max_order`
/// or an identification cannot be certified.
GroupClosure group_closure(const std::vector<VerifiedSymmetry>& syms, const CurveSpec& curve,
                           int max_order = 64);

}  // namespace curvesym
