#pragma once

#include "curvesym/classify.hpp"

#include <string>
#include <vector>

namespace curvesym {

struct SvgOptions {
    double xmin = -5, xmax = 5, ymin = -5, ymax = 5;
    int width_px = 640, height_px = 640;
    int samples = 1536;
    /// dim-3 curves are drawn in orthographic projection: which coordinates.
    int proj_x = 0, proj_y = 1;
};

/// Polyline rendering of the curve with the symmetry elements overlaid:
/// mirror lines/planes as dashed lines, rotation centres and inversion
/// centres as markers, rotation axes as dotted lines. Deterministic output.
/// Throws InputError for an empty window.
std::string emit_svg(const CurveSpec& curve, const std::vector<SymmetryElement>& elements,
                     const SvgOptions& options);

}  // namespace curvesym
