#include "curvesym/classify.hpp"

#include <algorithm>

namespace curvesym {

std::string kind_name(SymKind kind) {
    switch (kind) {
        case SymKind::mirror_line: return "mirror_line";
        case SymKind::central_symmetry_2d: return "central_symmetry_2d";
        case SymKind::rotation_2d: return "rotation_2d";
        case SymKind::mirror_plane: return "mirror_plane";
        case SymKind::axial_symmetry: return "axial_symmetry";
        case SymKind::rotation_3d: return "rotation_3d";
        case SymKind::central_inversion: return "central_inversion";
        case SymKind::rotatory_reflection: return "rotatory_reflection";
    }
    return "?";
}

bool kind_is_involution(SymKind kind) {
    switch (kind) {
        case SymKind::mirror_line:
        case SymKind::central_symmetry_2d:
        case SymKind::mirror_plane:
        case SymKind::axial_symmetry:
        case SymKind::central_inversion:
            return true;
        default:
            return false;
    }
}

bool kind_is_rotation(SymKind kind) {
    switch (kind) {
        case SymKind::rotation_2d:
        case SymKind::central_symmetry_2d:  // rotation by pi
        case SymKind::rotation_3d:
        case SymKind::axial_symmetry:  // rotation by pi about the axis
            return true;
        default:
            return false;
    }
}

namespace {

using Matrix = std::vector<std::vector<AlgValue>>;

AlgValue det_of(const Matrix& q) {
    if (q.size() == 2) return q[0][0] * q[1][1] - q[0][1] * q[1][0];
    return q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
           q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
           q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
}

int det_sign_of(const Matrix& q) {
    AlgValue d = det_of(q);
    if (d.equals(AlgValue(Rational(1)))) return 1;
    if (d.equals(AlgValue(Rational(-1)))) return -1;
    throw VerificationError("orthogonal matrix with determinant != +-1");
}

Matrix q_minus_identity(const Matrix& q) {
    Matrix m = q;
    for (size_t i = 0; i < m.size(); ++i) m[i][i] = m[i][i] - AlgValue(Rational(1));
    return m;
}

bool is_minus_identity(const Matrix& q) {
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) {
            if (i == j ? !q[i][j].equals(AlgValue(Rational(-1))) : !q[i][j].is_zero())
                return false;
        }
    return true;
}

/// Reduced row echelon form with exact vanishing-test pivots; returns rank.
/// Operates on an augmented matrix in place.
size_t rref(Matrix& m, std::vector<long>& pivot_col_of_row, size_t cols) {
    size_t rank = 0;
    pivot_col_of_row.assign(m.size(), -1);
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        AlgValue piv = m[rank][col];
        for (size_t j = 0; j < m[rank].size(); ++j) m[rank][j] = m[rank][j] / piv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            AlgValue f = m[r][col];
            for (size_t j = 0; j < m[r].size(); ++j) m[r][j] = m[r][j] - f * m[rank][j];
        }
        pivot_col_of_row[rank] = static_cast<long>(col);
        ++rank;
    }
    return rank;
}

size_t rank_of(const Matrix& m) {
    Matrix work = m;
    std::vector<long> pivots;
    return rref(work, pivots, m.size());
}

/// Orients v so its first exactly-nonzero coordinate is positive.
void orient(std::vector<AlgValue>& v) {
    for (AlgValue& c : v) {
        int s = c.is_zero() ? 0 : c.sign();
        if (s > 0) return;
        if (s < 0) {
            for (AlgValue& e : v) e = -e;
            return;
        }
    }
}

}  // namespace

FixedElement fixed_elements(const VerifiedSymmetry& sym) {
    size_t n = sym.Q.size();
    Matrix aug = q_minus_identity(sym.Q);
    for (size_t i = 0; i < n; ++i) aug[i].push_back(-sym.t[i]);
    std::vector<long> pivot_col_of_row;
    size_t rank = rref(aug, pivot_col_of_row, n);
    // Consistency: no pivot in the augmented column.
    for (size_t r = rank; r < n; ++r)
        if (!aug[r][n].is_zero())
            throw VerificationError("verified symmetry without fixed points");
    std::vector<bool> is_pivot(n, false);
    std::vector<AlgValue> particular(n, AlgValue(Rational(0)));
    for (size_t r = 0; r < rank; ++r) {
        is_pivot[static_cast<size_t>(pivot_col_of_row[r])] = true;
        particular[static_cast<size_t>(pivot_col_of_row[r])] = aug[r][n];
    }
    std::vector<std::vector<AlgValue>> nullspace;
    for (size_t freecol = 0; freecol < n; ++freecol) {
        if (is_pivot[freecol]) continue;
        std::vector<AlgValue> v(n, AlgValue(Rational(0)));
        v[freecol] = AlgValue(Rational(1));
        for (size_t r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col_of_row[r])] = -aug[r][freecol];
        nullspace.push_back(std::move(v));
    }

    FixedElement out;
    out.point = std::move(particular);
    if (nullspace.empty()) {
        out.kind = FixedElement::Kind::point;
    } else if (nullspace.size() == 1) {
        out.kind = FixedElement::Kind::line;
        out.direction = std::move(nullspace[0]);
        orient(out.direction);
    } else if (nullspace.size() == 2) {
        out.kind = FixedElement::Kind::plane;
        // Normal spans the row space of the symmetric matrix Q - I.
        Matrix qmi = q_minus_identity(sym.Q);
        for (const auto& row : qmi) {
            bool nonzero = false;
            for (const AlgValue& v : row) nonzero = nonzero || !v.is_zero();
            if (nonzero) {
                out.direction = row;
                break;
            }
        }
        orient(out.direction);
    } else {
        throw VerificationError("trivial symmetry reached fixed_elements");
    }
    return out;
}

AngleData rotation_angle_data(const VerifiedSymmetry& sym, SymKind kind, long degree_bound) {
    AngleData out;
    const Matrix& q = sym.Q;
    if (sym.dim == 2) {
        out.cos_theta = q[0][0];
        out.sin_exact = q[1][0];
        out.sin_sq = q[1][0] * q[1][0];
        out.sin_sign = q[1][0].is_zero() ? 0 : q[1][0].sign();
    } else {
        AlgValue trace = q[0][0] + q[1][1] + q[2][2];
        bool rotatory = kind == SymKind::rotatory_reflection;
        out.cos_theta = rotatory ? (trace + AlgValue(Rational(1))) / AlgValue(Rational(2))
                                 : (trace - AlgValue(Rational(1))) / AlgValue(Rational(2));
        out.sin_sq = AlgValue(Rational(1)) - out.cos_theta * out.cos_theta;
        // Antisymmetric part: (Q - Q^T)/2 = sin(theta) [axis]_x; the sign of
        // <w, axis> fixes sin relative to the oriented axis.
        std::vector<AlgValue> w = {(q[2][1] - q[1][2]) / AlgValue(Rational(2)),
                                   (q[0][2] - q[2][0]) / AlgValue(Rational(2)),
                                   (q[1][0] - q[0][1]) / AlgValue(Rational(2))};
        // Axis: kernel of (Q - I) for rotations, kernel of (Q + I) for
        // rotatory reflections.
        Matrix m = sym.Q;
        for (size_t i = 0; i < 3; ++i)
            m[i][i] = m[i][i] + AlgValue(Rational(rotatory ? 1 : -1));
        std::vector<long> pivots;
        size_t rank = rref(m, pivots, 3);
        std::vector<bool> is_pivot(3, false);
        for (size_t r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivots[r])] = true;
        std::vector<AlgValue> axis(3, AlgValue(Rational(0)));
        for (size_t freecol = 0; freecol < 3; ++freecol) {
            if (is_pivot[freecol]) continue;
            axis[freecol] = AlgValue(Rational(1));
            for (size_t r = 0; r < rank; ++r)
                axis[static_cast<size_t>(pivots[r])] = -m[r][freecol];
            break;
        }
        orient(axis);
        AlgValue dot{Rational(0)};
        for (size_t i = 0; i < 3; ++i) dot = dot + w[i] * axis[i];
        out.sin_sign = dot.is_zero() ? 0 : dot.sign();
    }
    int bound = static_cast<int>(2 * degree_bound + 2);
    out.order = moebius_order(sym.phi, bound);
    return out;
}

Interval AngleData::cos_interval(const Rational& width) const { return cos_theta.enclose(width); }

Interval AngleData::sin_interval(const Rational& width) const {
    if (sin_exact) return sin_exact->enclose(width);
    if (sin_sign == 0) return Interval::point(Rational(0));
    Interval sq = sin_sq.enclose(width * width / 4);
    Rational lo = sq.lo < 0 ? Rational(0) : sq.lo, hi = sq.hi < 0 ? Rational(0) : sq.hi;
    // Outward-rounded square roots at a scale matching the requested width.
    Int scale = den(width) * 4;
    auto root_lo = [&](const Rational& r) {
        Int s = sqrt(floor_q(r * Rational(scale * scale)));
        return Rational(s) / Rational(scale);
    };
    auto root_hi = [&](const Rational& r) {
        Int s = sqrt(floor_q(r * Rational(scale * scale))) + 1;
        return Rational(s) / Rational(scale);
    };
    Interval mag(root_lo(lo), root_hi(hi));
    return sin_sign > 0 ? mag : -mag;
}

SymmetryElement classify(const VerifiedSymmetry& sym, long degree_bound) {
    SymmetryElement out;
    out.certificate = sym;
    const Matrix& q = sym.Q;
    int det = det_sign_of(q);
    if (sym.dim == 2) {
        if (det == -1) {
            out.kind = SymKind::mirror_line;
        } else {
            out.kind = is_minus_identity(q) ? SymKind::central_symmetry_2d : SymKind::rotation_2d;
        }
    } else {
        size_t r = rank_of(q_minus_identity(q));
        if (r == 0) throw VerificationError("trivial symmetry reached classify");
        if (r == 1) {
            out.kind = SymKind::mirror_plane;
        } else if (r == 2) {
            out.kind = is_involution(sym) ? SymKind::axial_symmetry : SymKind::rotation_3d;
        } else if (is_minus_identity(q)) {
            out.kind = SymKind::central_inversion;
        } else if (det == -1) {
            out.kind = SymKind::rotatory_reflection;
        } else {
            throw VerificationError("proper rotation with rank(Q - I) = 3");
        }
    }
    out.fixed = fixed_elements(sym);
    if (kind_is_rotation(out.kind) || out.kind == SymKind::rotatory_reflection) {
        out.angle = rotation_angle_data(sym, out.kind, degree_bound);
        out.order = out.angle->order;
    } else {
        out.order = 2;  // remaining kinds are involutions
    }
    return out;
}

std::vector<SymmetryElement> dedupe(std::vector<SymmetryElement> elements) {
    std::vector<SymmetryElement> out;
    for (SymmetryElement& e : elements) {
        bool dup = false;
        for (const SymmetryElement& seen : out)
            if (same_symmetry(seen.certificate, e.certificate)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const SymmetryElement& a, const SymmetryElement& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        const RealAlgebraic &ra = *a.certificate.b_star, &rb = *b.certificate.b_star;
        Rational ka = ra.is_rational() ? *ra.exact_rational() : ra.isolating().mid();
        Rational kb = rb.is_rational() ? *rb.exact_rational() : rb.isolating().mid();
        if (ka != kb) return ka < kb;
        return a.certificate.branch < b.certificate.branch;
    });
    return out;
}

}  // namespace curvesym
