#include "curvesym/report.hpp"

#include "curvesym/expr.hpp"
#include "curvesym/numeric_check.hpp"

#include <chrono>
#include <fstream>

namespace curvesym {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        auto r = parse_rational(v.get<std::string>());
        if (r) return *r;
    }
    throw InputError("bad rational in " + what);
}

Poly poly_from_json(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw InputError(what + ": expected coefficient array");
    std::vector<Rational> c;
    for (const auto& v : arr) c.push_back(rational_from_json(v, what));
    return Poly(std::move(c));
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

}  // namespace

MoebiusQ parse_moebius_expr(const std::string& text) {
    RatFun f = parse_ratfun(text, "t");
    if (f.num().degree() > 1 || f.den().degree() > 1)
        throw InputError("reparametrization must be a Moebius map: " + text);
    auto coeff = [](const Poly& p, size_t i) {
        return i <= static_cast<size_t>(p.degree()) ? p[i] : Rational(0);
    };
    MoebiusQ u{coeff(f.num(), 1), coeff(f.num(), 0), coeff(f.den(), 1), coeff(f.den(), 0)};
    if (u.delta() == 0) throw InputError("reparametrization is not invertible: " + text);
    return u;
}

CurveDoc parse_curve_doc(const json& doc) {
    if (!doc.is_object()) throw InputError("curve document must be a JSON object");
    if (doc.contains("schema") && doc["schema"].get<int>() != 1)
        throw InputError("unsupported curve document schema");
    int dim = doc.at("dim").get<int>();
    std::string var = doc.value("var", "t");
    std::vector<RatFun> comps;
    for (const auto& c : doc.at("components")) {
        if (c.is_string()) {
            comps.push_back(parse_ratfun(c.get<std::string>(), var));
        } else if (c.is_object()) {
            Poly num = poly_from_json(c.at("num"), "component numerator");
            Poly den = c.contains("den") ? poly_from_json(c.at("den"), "component denominator")
                                         : Poly::one();
            comps.emplace_back(std::move(num), std::move(den));
        } else {
            throw InputError("component must be an expression string or a num/den object");
        }
    }
    CurveDoc out{CurveSpec(dim, std::move(comps), doc.value("name", "")), std::nullopt};
    if (doc.contains("reparam")) out.reparam = parse_moebius_expr(doc["reparam"].get<std::string>());
    return out;
}

CurveDoc parse_curve_doc_text(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("curve document is not valid JSON: ") + e.what());
    }
    return parse_curve_doc(doc);
}

ClassifiedReport run_detection(const CurveSpec& curve, const DetectOptions& options) {
    ClassifiedReport out{detect_all(curve, options), {}, std::nullopt, 0, 0};
    long bound = out.detection.working.degree_bound();
    std::vector<SymmetryElement> elems;
    for (const VerifiedSymmetry& s : out.detection.symmetries)
        elems.push_back(classify(s, bound));
    out.elements = dedupe(std::move(elems));
    for (const SymmetryElement& e : out.elements) {
        if (kind_is_rotation(e.kind)) ++out.rotation_count;
        if (kind_is_involution(e.kind)) ++out.involution_count;
    }
    if (options.closure)
        out.closure = group_closure(out.detection.symmetries, out.detection.working,
                                    options.max_group_order);
    return out;
}

namespace {

json value_to_json(const AlgValue& v, const Rational& width) {
    if (v.is_rational()) return to_string(v.rational());
    Interval e = v.enclose(width);
    json out;
    out["approx"] = decimal_string(e.mid(), 15);
    out["interval"] = json::array({to_string(e.lo), to_string(e.hi)});
    return out;
}

json vector_to_json(const std::vector<AlgValue>& v, const Rational& width) {
    json out = json::array();
    for (const AlgValue& c : v) out.push_back(value_to_json(c, width));
    return out;
}

json root_to_json(const RealAlgebraic& r, const Rational& width) {
    json out;
    out["defining"] = poly_to_json(r.defining());
    RealAlgebraic fine = refine_root(r, width);
    out["interval"] = json::array(
        {to_string(fine.isolating().lo), to_string(fine.isolating().hi)});
    out["approx"] = decimal_string(fine.isolating().mid(), 15);
    out["width"] = decimal_string(fine.isolating().width(), 18);
    if (r.is_rational()) out["rational"] = to_string(*r.exact_rational());
    return out;
}

std::string moebius_alg_to_string(const MoebiusAlg& phi, const Rational& width) {
    auto render = [&](const AlgValue& v) {
        if (v.is_rational()) return to_string(v.rational());
        return decimal_string(v.enclose(width).mid(), 12);
    };
    // Descending linear rendering to match the rational printer.
    auto linear = [&](const AlgValue& hi, const AlgValue& lo) {
        std::string out;
        if (!hi.is_zero()) {
            if (hi.equals(AlgValue(Rational(1))))
                out = "t";
            else if (hi.equals(AlgValue(Rational(-1))))
                out = "-t";
            else
                out = render(hi) + "*t";
        }
        if (!lo.is_zero() || out.empty()) {
            std::string ls = render(lo);
            if (out.empty()) {
                out = ls;
            } else if (!ls.empty() && ls[0] == '-') {
                out += " - " + ls.substr(1);
            } else {
                out += " + " + ls;
            }
        }
        return out;
    };
    std::string den = linear(phi.c, phi.d);
    bool den_simple = phi.c.is_zero();
    return "(" + linear(phi.a, phi.b) + ")/" + (den_simple ? den : "(" + den + ")");
}

json element_to_json(const SymmetryElement& e, const Rational& width) {
    json out;
    out["kind"] = kind_name(e.kind);
    const VerifiedSymmetry& s = e.certificate;
    out["branch"] = branch_label(s.branch, s.det_sign, s.sigma_sign);
    out["root"] = root_to_json(*s.b_star, width);
    out["phi"] = moebius_alg_to_string(s.phi, width);
    json q = json::array();
    for (const auto& row : s.Q) {
        json jrow = json::array();
        for (const AlgValue& v : row) jrow.push_back(value_to_json(v, width));
        q.push_back(jrow);
    }
    out["Q"] = q;
    out["translation"] = vector_to_json(s.t, width);
    if (e.fixed) {
        json f;
        switch (e.fixed->kind) {
            case FixedElement::Kind::point: f["kind"] = "point"; break;
            case FixedElement::Kind::line: f["kind"] = "line"; break;
            case FixedElement::Kind::plane: f["kind"] = "plane"; break;
        }
        f["point"] = vector_to_json(e.fixed->point, width);
        if (!e.fixed->direction.empty())
            f[e.fixed->kind == FixedElement::Kind::plane ? "normal" : "direction"] =
                vector_to_json(e.fixed->direction, width);
        out["fixed"] = f;
    }
    if (e.angle) {
        json a;
        Interval ci = e.angle->cos_interval(width);
        Interval si = e.angle->sin_interval(width);
        a["cos"] = json::array({to_string(ci.lo), to_string(ci.hi)});
        a["sin"] = json::array({to_string(si.lo), to_string(si.hi)});
        a["cos_approx"] = decimal_string(ci.mid(), 15);
        a["sin_approx"] = decimal_string(si.mid(), 15);
        if (e.angle->order) a["order"] = *e.angle->order;
        out["angle"] = a;
    }
    if (e.order) out["order"] = *e.order;
    return out;
}

}  // namespace

json report_to_json(const ClassifiedReport& report, const Rational& width) {
    const DetectionResult& det = report.detection;
    json out;
    out["schema"] = 1;
    json curve;
    curve["dim"] = det.original.dim();
    if (!det.original.name().empty()) curve["name"] = det.original.name();
    json comps = json::array();
    for (const RatFun& f : det.original.components()) comps.push_back(to_expression(f));
    curve["components"] = comps;
    out["curve"] = curve;
    out["general_position"] = json{{"u", det.reparam.to_string()},
                                   {"a", to_string(det.reparam.a)},
                                   {"b", to_string(det.reparam.b)},
                                   {"c", to_string(det.reparam.c)},
                                   {"d", to_string(det.reparam.d)}};
    switch (det.properness) {
        case Properness::proper: out["properness"] = "proper"; break;
        case Properness::improper: out["properness"] = "improper"; break;
        case Properness::inconclusive: out["properness"] = "inconclusive"; break;
    }
    if (det.working.dim() == 3) out["is_ph"] = det.is_ph;
    out["rotations_complete"] = det.rotations_complete;

    json branches = json::array();
    long bound = det.working.degree_bound();
    for (const BranchRun& run : det.branches) {
        json b;
        b["branch"] = run.label;
        b["P"] = poly_to_json(run.P);
        b["raw_content"] = poly_to_json(run.raw_content);
        b["root_count"] = run.root_count;
        b["skipped_by_prefilter"] = run.skipped_by_prefilter;
        json syms = json::array();
        for (const VerifiedSymmetry& s : run.found)
            syms.push_back(element_to_json(classify(s, bound), width));
        b["symmetries"] = syms;
        branches.push_back(b);
    }
    out["branches"] = branches;

    json elements = json::array();
    for (const SymmetryElement& e : report.elements) elements.push_back(element_to_json(e, width));
    out["elements"] = elements;

    json counts;
    counts["rotations"] = report.rotation_count;
    counts["involutions"] = report.involution_count;
    counts["total_distinct"] = report.elements.size();
    json per_branch;
    for (const BranchRun& run : det.branches) per_branch[run.label] = run.found.size();
    counts["per_branch"] = per_branch;
    out["counts"] = counts;

    if (report.closure) {
        json c;
        c["group_order"] = report.closure->order;
        c["grew_beyond_input"] = report.closure->grew_beyond_input;
        out["closure"] = c;
    }
    return out;
}

std::string emit_report(const ClassifiedReport& report, const Rational& width) {
    return report_to_json(report, width).dump(2) + "\n";
}

CorpusResult run_corpus_json(const json& corpus, bool use_pinned_reparam) {
    if (!corpus.is_object() || !corpus.contains("entries"))
        throw InputError("corpus: expected an object with an \"entries\" array");
    CorpusResult result;
    for (const auto& entry : corpus["entries"]) {
        CorpusRow row;
        row.name = entry.value("name", "?");
        auto t0 = std::chrono::steady_clock::now();
        CurveDoc doc = parse_curve_doc(entry);
        DetectOptions opt;
        if (use_pinned_reparam && doc.reparam) opt.reparam_override = *doc.reparam;
        ClassifiedReport rep = run_detection(doc.curve, opt);
        row.rotations = rep.rotation_count;
        row.involutions = rep.involution_count;
        row.pass = true;
        if (entry.contains("expect")) {
            const json& ex = entry["expect"];
            if (ex.contains("rotations")) {
                row.expected_rotations = ex["rotations"].get<int>();
                row.pass = row.pass && row.expected_rotations == row.rotations;
            }
            if (ex.contains("involutions")) {
                row.expected_involutions = ex["involutions"].get<int>();
                row.pass = row.pass && row.expected_involutions == row.involutions;
            }
        }
        row.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.total_seconds += row.seconds;
        result.all_pass = result.all_pass && row.pass;
        result.rows.push_back(std::move(row));
    }
    return result;
}

CorpusResult run_corpus_file(const std::string& path, bool use_pinned_reparam) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file: " + path);
    json corpus;
    try {
        in >> corpus;
    } catch (const json::parse_error& e) {
        throw InputError(std::string("corpus is not valid JSON: ") + e.what());
    }
    return run_corpus_json(corpus, use_pinned_reparam);
}

}  // namespace curvesym
