#include "curvesym/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace curvesym {

namespace {

double eval_poly_d(const Poly& p, double t) {
    double acc = 0;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        acc = acc * t + to_double(*it);
    return acc;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Mapper {
    const SvgOptions& o;
    double sx(double x) const { return (x - o.xmin) / (o.xmax - o.xmin) * o.width_px; }
    double sy(double y) const { return (o.ymax - y) / (o.ymax - o.ymin) * o.height_px; }
};

double approx(const AlgValue& v) { return v.approx(); }

}  // namespace

std::string emit_svg(const CurveSpec& curve, const std::vector<SymmetryElement>& elements,
                     const SvgOptions& o) {
    if (o.xmax <= o.xmin || o.ymax <= o.ymin) throw InputError("svg: empty window");
    Mapper m{o};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width_px << "\" height=\""
        << o.height_px << "\" viewBox=\"0 0 " << o.width_px << " " << o.height_px << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    size_t ix = static_cast<size_t>(o.proj_x), iy = static_cast<size_t>(o.proj_y);
    const RatFun& fx = curve.component(ix);
    const RatFun& fy = curve.component(iy);
    double diag = std::hypot(o.xmax - o.xmin, o.ymax - o.ymin);

    // Sample over the whole real line through t = tan(s); break the polyline
    // at poles and jumps.
    std::vector<std::pair<double, double>> run;
    auto flush = [&]() {
        if (run.size() >= 2) {
            out << "<polyline class=\"curve\" fill=\"none\" stroke=\"#1a66aa\" "
                   "stroke-width=\"1.5\" points=\"";
            for (const auto& [x, y] : run) out << fmt(m.sx(x)) << "," << fmt(m.sy(y)) << " ";
            out << "\"/>\n";
        }
        run.clear();
    };
    const double pi = 3.14159265358979323846;
    double prev_x = 0, prev_y = 0;
    bool have_prev = false;
    for (int k = 1; k < o.samples; ++k) {
        double s = -pi / 2 + pi * k / o.samples;
        double t = std::tan(s);
        double dx = eval_poly_d(fx.den(), t), dy = eval_poly_d(fy.den(), t);
        if (std::fabs(dx) < 1e-9 || std::fabs(dy) < 1e-9) {
            flush();
            have_prev = false;
            continue;
        }
        double x = eval_poly_d(fx.num(), t) / dx, y = eval_poly_d(fy.num(), t) / dy;
        if (!std::isfinite(x) || !std::isfinite(y)) {
            flush();
            have_prev = false;
            continue;
        }
        if (have_prev && std::hypot(x - prev_x, y - prev_y) > 0.5 * diag) {
            flush();
        }
        prev_x = x;
        prev_y = y;
        have_prev = true;
        if (x < o.xmin - diag || x > o.xmax + diag || y < o.ymin - diag || y > o.ymax + diag) {
            flush();
            have_prev = false;
            continue;
        }
        run.emplace_back(x, y);
    }
    flush();

    auto draw_line = [&](double px, double py, double vx, double vy, const char* cls,
                         const char* dash) {
        double norm = std::hypot(vx, vy);
        if (norm < 1e-12) return;
        vx /= norm;
        vy /= norm;
        double ext = diag;
        out << "<line class=\"" << cls << "\" x1=\"" << fmt(m.sx(px - ext * vx)) << "\" y1=\""
            << fmt(m.sy(py - ext * vy)) << "\" x2=\"" << fmt(m.sx(px + ext * vx)) << "\" y2=\""
            << fmt(m.sy(py + ext * vy)) << "\" stroke=\"#aa3322\" stroke-width=\"1\" "
            << "stroke-dasharray=\"" << dash << "\"/>\n";
    };
    std::vector<std::string> drawn_centers;
    auto draw_center = [&](double px, double py, const char* cls) {
        std::string key = fmt(m.sx(px)) + "," + fmt(m.sy(py));
        for (const std::string& seen : drawn_centers)
            if (seen == key) return;  // coincident centres collapse to one marker
        drawn_centers.push_back(key);
        out << "<circle class=\"" << cls << "\" cx=\"" << fmt(m.sx(px)) << "\" cy=\""
            << fmt(m.sy(py)) << "\" r=\"4\" fill=\"#aa3322\"/>\n";
    };

    for (const SymmetryElement& e : elements) {
        if (!e.fixed) continue;
        const FixedElement& f = *e.fixed;
        double px = approx(f.point[ix]), py = approx(f.point[iy]);
        switch (e.kind) {
            case SymKind::mirror_line:
                draw_line(px, py, approx(f.direction[ix]), approx(f.direction[iy]), "mirror",
                          "6,4");
                break;
            case SymKind::mirror_plane:
                // Projected trace of the plane through its fixed point.
                draw_line(px, py, approx(f.direction[iy]), -approx(f.direction[ix]), "mirror",
                          "6,4");
                break;
            case SymKind::rotation_2d:
            case SymKind::central_symmetry_2d:
            case SymKind::central_inversion:
                draw_center(px, py, "center");
                break;
            case SymKind::rotation_3d:
            case SymKind::axial_symmetry:
            case SymKind::rotatory_reflection:
                draw_line(px, py, approx(f.direction[ix]), approx(f.direction[iy]), "axis",
                          "2,3");
                break;
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace curvesym
