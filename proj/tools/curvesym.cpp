#include "curvesym/expr.hpp"
#include "curvesym/numeric_check.hpp"
#include "curvesym/report.hpp"
#include "curvesym/svg.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace curvesym;

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string slurp(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open input file: " + path);
    return read_all(f);
}

void write_file(const std::string& path, const std::string& bytes) {
    if (path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open output file: " + path);
    f << bytes;
}

void print_summary(const ClassifiedReport& rep, double seconds, bool timings) {
    const DetectionResult& det = rep.detection;
    std::cout << "curve: "
              << (det.original.name().empty() ? "(unnamed)" : det.original.name())
              << "  dim=" << det.original.dim() << "\n";
    std::cout << "general position: u(t) = " << det.reparam.to_string() << "\n";
    if (det.working.dim() == 3)
        std::cout << "pythagorean hodograph: " << (det.is_ph ? "yes" : "no") << "\n";
    if (det.properness == Properness::inconclusive)
        std::cout << "note: properness heuristic inconclusive; results assume properness\n";
    for (const BranchRun& run : det.branches) {
        std::cout << "  branch " << run.label << ": ";
        if (run.skipped_by_prefilter) {
            std::cout << "skipped (curvature condition admits only trivial roots)\n";
            continue;
        }
        std::cout << "P(b) = " << run.P.to_string("b") << ", roots " << run.root_count
                  << ", symmetries " << run.found.size() << "\n";
    }
    std::cout << "distinct nontrivial symmetries: " << rep.elements.size() << " ("
              << rep.rotation_count << " rotation-like, " << rep.involution_count
              << " involutions)\n";
    long bound = det.working.degree_bound();
    (void)bound;
    for (const SymmetryElement& e : rep.elements) {
        std::cout << "  - " << kind_name(e.kind);
        if (e.order) std::cout << " (order " << *e.order << ")";
        std::cout << "\n";
    }
    if (!det.rotations_complete)
        std::cout << "note: space curve is not Pythagorean-hodograph; the rotation list "
                     "may be incomplete (involutions are complete)\n";
    if (rep.closure)
        std::cout << "group closure: order " << rep.closure->order
                  << (rep.closure->grew_beyond_input ? " (grew beyond input)" : "") << "\n";
    if (timings) std::cout << "time: " << seconds << " s\n";
}

int run_detect(const std::string& input, const std::string& expr, int dim,
               const std::string& name, const std::string& branches, bool closure,
               bool skip_properness, const std::string& refine_width, const std::string& reparam,
               const std::string& json_out, const std::string& svg_out,
               const std::string& window, const std::string& proj, bool timings) {
    CurveDoc doc = [&]() {
        if (!expr.empty()) {
            if (dim == 0) throw InputError("--expr requires --dim");
            return CurveDoc{
                CurveSpec(dim, parse_component_list(expr, static_cast<size_t>(dim)), name),
                std::nullopt};
        }
        if (input.empty()) throw InputError("need --input or --expr");
        return parse_curve_doc_text(slurp(input));
    }();

    DetectOptions opt;
    if (branches == "involutions")
        opt.branches = DetectOptions::BranchFilter::involutions;
    else if (branches == "rotations")
        opt.branches = DetectOptions::BranchFilter::rotations;
    opt.closure = closure;
    opt.skip_properness = skip_properness;
    if (!refine_width.empty()) {
        auto w = parse_rational(refine_width);
        if (!w || *w <= 0) throw InputError("bad --refine-width");
        opt.refine_width = *w;
    }
    if (!reparam.empty())
        opt.reparam_override = parse_moebius_expr(reparam);
    else if (doc.reparam)
        opt.reparam_override = *doc.reparam;

    auto t0 = std::chrono::steady_clock::now();
    ClassifiedReport rep = run_detection(doc.curve, opt);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    print_summary(rep, seconds, timings);
    if (!json_out.empty()) write_file(json_out, emit_report(rep, opt.refine_width));
    if (!svg_out.empty()) {
        SvgOptions so;
        if (!window.empty()) {
            std::istringstream ws(window);
            char comma;
            if (!(ws >> so.xmin >> comma >> so.xmax >> comma >> so.ymin >> comma >> so.ymax))
                throw InputError("bad --window (expected x0,x1,y0,y1)");
        }
        if (proj == "xz") {
            so.proj_x = 0;
            so.proj_y = 2;
        } else if (proj == "yz") {
            so.proj_x = 1;
            so.proj_y = 2;
        }
        write_file(svg_out, emit_svg(rep.detection.original, rep.elements, so));
    }
    return 0;
}

int run_corpus_cmd(const std::string& path, bool timings) {
    CorpusResult res = run_corpus_file(path);
    std::printf("%-16s %5s %5s %8s  %s\n", "name", "#rot", "#inv", "time", "status");
    for (const CorpusRow& row : res.rows) {
        std::string rot = row.rotations >= 0 ? std::to_string(row.rotations) : "-";
        std::string inv = row.involutions >= 0 ? std::to_string(row.involutions) : "-";
        std::string status = row.pass ? "ok" : "MISMATCH";
        if (!row.pass) {
            status += " (expected";
            if (row.expected_rotations >= 0)
                status += " rot=" + std::to_string(row.expected_rotations);
            if (row.expected_involutions >= 0)
                status += " inv=" + std::to_string(row.expected_involutions);
            status += ")";
        }
        std::printf("%-16s %5s %5s %7.2fs  %s\n", row.name.c_str(), rot.c_str(), inv.c_str(),
                    row.seconds, status.c_str());
    }
    if (timings) std::printf("total: %.2fs\n", res.total_seconds);
    return res.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry detection for rational plane and space curves"};
    app.require_subcommand(1);

    auto* detect = app.add_subcommand("detect", "detect the symmetries of one curve");
    std::string input, expr, name, branches = "all", refine_width, reparam, json_out, svg_out,
                window, proj = "xy";
    int dim = 0;
    bool closure = false, skip_properness = false, timings = false;
    detect->add_option("--input", input, "curve document (JSON file, or - for stdin)");
    detect->add_option("--expr", expr, "components as an expression list, e.g. \"(t, t^2)\"");
    detect->add_option("--dim", dim, "dimension (2 or 3), required with --expr");
    detect->add_option("--name", name, "curve label for the report");
    detect->add_option("--branches", branches, "all | involutions | rotations")
        ->check(CLI::IsMember({"all", "involutions", "rotations"}));
    detect->add_flag("--closure", closure, "close the symmetries under composition");
    detect->add_flag("--skip-properness", skip_properness, "skip the properness heuristic");
    detect->add_option("--refine-width", refine_width,
                       "interval width for reported approximations (default 1e-12)");
    detect->add_option("--reparam", reparam, "pin the general-position reparametrization u(t)");
    detect->add_option("--json", json_out, "write the JSON report here (- for stdout)");
    detect->add_option("--svg", svg_out, "write an SVG rendering here");
    detect->add_option("--window", window, "SVG window as x0,x1,y0,y1 (default -5,5,-5,5)");
    detect->add_option("--proj", proj, "projection for space curves: xy | xz | yz")
        ->check(CLI::IsMember({"xy", "xz", "yz"}));
    detect->add_flag("--timings", timings, "print wall-clock timing");

    auto* corpus = app.add_subcommand("corpus", "run a corpus file and compare expected counts");
    std::string corpus_path;
    bool corpus_timings = false;
    corpus->add_option("file", corpus_path, "corpus JSON file")->required();
    corpus->add_flag("--timings", corpus_timings, "print total wall-clock time");

    try {
        app.parse(argc, argv);
        if (detect->parsed())
            return run_detect(input, expr, dim, name, branches, closure, skip_properness,
                              refine_width, reparam, json_out, svg_out, window, proj, timings);
        return run_corpus_cmd(corpus_path, corpus_timings);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input rejected: " << e.what() << "\n";
        return 1;
    } catch (const VerificationError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
