#pragma once

#include "curvesym/detect.hpp"

namespace curvesym {

/// Floating-point cross-check of an exact certificate: samples random
/// parameters away from poles and returns max |f(x(t)) - x(phi(t))| in
/// double precision. Exact symmetries give pure rounding noise (< 1e-9);
/// a perturbed matrix is detected immediately. samples = 0 returns 0.
double verify_numeric(const CurveSpec& curve, const VerifiedSymmetry& sym, int samples);

/// Same check with one entry of Q perturbed; used to demonstrate that the
/// oracle actually detects broken symmetries.
double verify_numeric_perturbed(const CurveSpec& curve, const VerifiedSymmetry& sym, int samples,
                                double epsilon);

}  // namespace curvesym
