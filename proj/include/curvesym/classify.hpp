#pragma once

#include "curvesym/detect.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvesym {

enum class SymKind {
    mirror_line,
    central_symmetry_2d,
    rotation_2d,
    mirror_plane,
    axial_symmetry,
    rotation_3d,
    central_inversion,
    rotatory_reflection,
};

std::string kind_name(SymKind kind);
bool kind_is_involution(SymKind kind);
bool kind_is_rotation(SymKind kind);

/// Fixed-point set of the isometry: a point, a line (axis), or a plane.
struct FixedElement {
    enum class Kind { point, line, plane } kind;
    std::vector<AlgValue> point;
    std::vector<AlgValue> direction;  // axis direction or plane normal; oriented
};

struct AngleData {
    AlgValue cos_theta{Rational(1)};
    /// dim 2: exact sin. dim 3: sin is sign * sqrt(sin_sq) with the sign
    /// taken relative to the oriented axis.
    std::optional<AlgValue> sin_exact;
    AlgValue sin_sq{Rational(0)};
    int sin_sign = 0;
    std::optional<int> order;

    Interval cos_interval(const Rational& width) const;
    Interval sin_interval(const Rational& width) const;
};

struct SymmetryElement {
    SymKind kind;
    VerifiedSymmetry certificate;
    std::optional<FixedElement> fixed;
    std::optional<AngleData> angle;
    std::optional<int> order;
};

/// Exact rank of (Q - I) with vanishing-test pivots, determinant sign of Q,
/// and the full classification of the spec's table. Requires a nontrivial
/// verified symmetry.
SymmetryElement classify(const VerifiedSymmetry& sym, long degree_bound);

/// (cos, sin, order) of a rotation (or the rotational part of a rotatory
/// reflection).
AngleData rotation_angle_data(const VerifiedSymmetry& sym, SymKind kind, long degree_bound);

/// Affine solution set of (Q - I) x = -t on the exact representatives.
FixedElement fixed_elements(const VerifiedSymmetry& sym);

/// Removes duplicates under the exact projective Moebius comparison;
/// deterministic output order (kind, then isolating-interval midpoints).
std::vector<SymmetryElement> dedupe(std::vector<SymmetryElement> elements);

}  // namespace curvesym
