#ifndef CURVEDIFF_ANALYZE_HPP
#define CURVEDIFF_ANALYZE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvediff/affine.hpp"
#include "curvediff/parser.hpp"

namespace curvediff {

struct AnalyzeOptions {
    bool euclidean = true;
    bool rectifiability = true;
    bool affine = true;
    bool classification = true;
    bool real_divisor = true;
};

struct RectifiabilityReport {
    bool exact = false;
    // exact case
    QRatFunc f;
    QRatFunc primitive_p;
    QPoly primitive_radicand = QPoly(1);
    Rat primitive_scalar = 1;
    // witness for the non-exact case
    std::string witness_kind; // "residue_obstruction" | "ansatz_insolvable"
    QPoly obstruction_factor;
    int system_rows = 0;
    int system_cols = 0;

    friend bool operator==(const RectifiabilityReport&, const RectifiabilityReport&) = default;
};

RectifiabilityReport summarize_verdict(const RectificationVerdict& v);

struct DifferentialSection {
    int k = 2;
    QRatFunc coeff;
    Divisor divisor;
    StratumSignature stratum;
    std::optional<RectifiabilityReport> rect;
    std::string note;

    friend bool operator==(const DifferentialSection&, const DifferentialSection&) = default;
};

struct ClassificationReport {
    std::string kind; // "line" | "circle" | "neither"
    Rat line_a = 0, line_b = 0, line_c = 0;
    Rat center_x = 0, center_y = 0, radius2 = 0;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct RealDivisorEntryReport {
    std::string factor; // "infinity" for the point at infinity
    int order = 0;
    int real_root_count = 0;
    bool parity_ok = true;
    std::optional<int> dz_order;
    bool dz_order_ok = true;

    friend bool operator==(const RealDivisorEntryReport&, const RealDivisorEntryReport&) = default;
};

struct RealDivisorSummary {
    bool pass = true;
    std::string detail;
    std::vector<RealDivisorEntryReport> entries;

    friend bool operator==(const RealDivisorSummary&, const RealDivisorSummary&) = default;
};

struct AnalysisReport {
    CurveSpec spec;
    std::optional<DifferentialSection> euclidean;
    std::optional<DifferentialSection> affine;
    std::string affine_error; // operation name + message for degenerate inputs
    std::optional<ClassificationReport> classification;
    std::optional<RealDivisorSummary> real_divisor;
    // squarefree factors of the arc-length coefficient and of the curvature
    // wedge: parameter values where the evolute/involute formulas degenerate
    std::vector<QPoly> excluded_parameters;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const CurveSpec& spec, const AnalyzeOptions& options = {});

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);
std::string report_to_text(const AnalysisReport& report);

// Bundled example curves with their expected invariants.
struct FixtureExpectation {
    CurveSpec spec;
    std::string euclid_stratum;
    std::string zero_locus_factor; // expected monic zero factor ("" = none checked)
    std::string rect_verdict;      // "exact" | "residue_obstruction" | "ansatz_insolvable"
    std::string expected_f;        // expression, "" = not checked
    std::string expected_primitive_p;
    std::string affine_coeff;      // expression, "" = not checked
    std::string affine_stratum;
    std::string affine_verdict;
    std::string classification;    // "line" | "circle" | "neither"
    std::string note;
};

const std::vector<FixtureExpectation>& corpus_fixtures();

struct CorpusResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> mismatches; // "field: expected E, got A"
    std::string note;
};

struct CorpusSummary {
    std::vector<CorpusResult> results;
    bool all_pass = true;
};

CorpusSummary run_corpus();

} // namespace curvediff

#endif
