#pragma once

#include "curvesym/classify.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace curvesym {

/// Curve input document: components as expression strings or as
/// {"num": [...], "den": [...]} coefficient lists (ascending, rationals as
/// "p/q" strings), plus an optional pinned reparametrization u(t).
struct CurveDoc {
    CurveSpec curve;
    std::optional<MoebiusQ> reparam;
};

CurveDoc parse_curve_doc(const nlohmann::json& doc);
CurveDoc parse_curve_doc_text(const std::string& bytes);

/// Parses a Moebius map from expression text like "(t - 1)/(t + 1)".
MoebiusQ parse_moebius_expr(const std::string& text);

/// Detection plus classification plus optional closure: everything a report
/// needs.
struct ClassifiedReport {
    DetectionResult detection;
    std::vector<SymmetryElement> elements;
    std::optional<GroupClosure> closure;
    int rotation_count = 0;
    int involution_count = 0;
};

ClassifiedReport run_detection(const CurveSpec& curve, const DetectOptions& options);

/// Canonical JSON: sorted keys, all numerics as strings, approximations at
/// the given interval width. Byte-identical across runs for equal inputs.
nlohmann::json report_to_json(const ClassifiedReport& report, const Rational& width);
std::string emit_report(const ClassifiedReport& report, const Rational& width);

struct CorpusRow {
    std::string name;
    int rotations = -1, involutions = -1;
    int expected_rotations = -1, expected_involutions = -1;
    bool pass = false;
    double seconds = 0;
};

struct CorpusResult {
    std::vector<CorpusRow> rows;
    bool all_pass = true;
    double total_seconds = 0;
};

/// Runs detection for every corpus entry with the pinned reparametrization
/// and compares per-kind counts against expectations.
CorpusResult run_corpus_json(const nlohmann::json& corpus, bool use_pinned_reparam = true);
CorpusResult run_corpus_file(const std::string& path, bool use_pinned_reparam = true);

}  // namespace curvesym
