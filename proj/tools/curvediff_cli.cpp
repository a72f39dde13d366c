#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "curvediff/analyze.hpp"
#include "curvediff/pluecker.hpp"

namespace {

using curvediff::AnalysisReport;
using curvediff::CurveSpec;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitAnalysisError = 1;
constexpr int kExitParseError = 2;
constexpr int kExitFixtureMismatch = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw curvediff::Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CurveSpec load_spec(const std::string& path, const std::vector<std::string>& param_overrides) {
    CurveSpec spec = curvediff::parse_curve_spec(read_file(path));
    for (const std::string& kv : param_overrides) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos) throw curvediff::Error("bad --param, expected name=value");
        spec.params[kv.substr(0, eq)] = curvediff::rat_from_string(kv.substr(eq + 1));
    }
    return spec;
}

ordered_json pluecker_json(const curvediff::PlueckerRecord& r) {
    ordered_json j;
    j["variant"] = r.variant == curvediff::CurveVariant::rational ? "rational" : "generic";
    j["degree"] = r.degree;
    j["genus"] = r.genus;
    j["class"] = r.curve_class;
    j["nodes"] = r.nodes;
    j["cusps"] = r.cusps;
    j["inflections"] = r.inflections;
    j["dual_nodes"] = r.dual_nodes;
    j["dual_cusps"] = r.dual_cusps;
    j["dual_inflections"] = r.dual_inflections;
    return j;
}

ordered_json evolute_json(const curvediff::EvoluteCounts& e) {
    ordered_json j;
    j["variant"] = e.variant == curvediff::CurveVariant::rational ? "rational" : "generic";
    j["degree"] = e.degree;
    j["class"] = e.curve_class;
    j["cusps"] = e.cusps;
    j["nodes"] = e.nodes;
    j["normals_nodes"] = e.normals_nodes;
    if (e.normals_inflections) j["normals_inflections"] = *e.normals_inflections;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of rational plane curves: arc-length and affine "
                 "differentials, strata, rectifiability, evolutes and realizations"};
    app.require_subcommand(1);

    bool as_json = false;
    std::vector<std::string> params;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--param", params, "override curve parameters, name=value");

    std::string file;
    curvediff::AnalyzeOptions options;

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for a curve file");
    analyze_cmd->add_option("file", file, "curve spec file")->required();
    analyze_cmd->add_flag("--no-affine", [&options](int64_t) { options.affine = false; },
                          "skip the affine section");
    analyze_cmd->add_flag("--no-classify",
                          [&options](int64_t) { options.classification = false; },
                          "skip line/circle classification");
    analyze_cmd->add_flag("--no-real-divisor",
                          [&options](int64_t) { options.real_divisor = false; },
                          "skip the real divisor check");

    auto* rectify_cmd = app.add_subcommand("rectify", "arc-length rectifiability only");
    std::string raw_expr;
    int raw_k = 2;
    rectify_cmd->add_option("file", file, "curve spec file");
    rectify_cmd->add_option("--expr", raw_expr, "raw differential coefficient h(t)");
    rectify_cmd->add_option("--k", raw_k, "differential order for --expr")
        ->check(CLI::Range(1, 3));

    auto* affine_cmd = app.add_subcommand("affine", "affine cubic differential and exactness");
    affine_cmd->add_option("file", file, "curve spec file")->required();

    auto* evolute_cmd = app.add_subcommand("evolute", "evolute parametrization");
    evolute_cmd->add_option("file", file, "curve spec file")->required();

    auto* pluecker_cmd = app.add_subcommand("pluecker", "degree/class/singularity counts");
    int64_t degree = 0;
    std::string variant = "rational";
    pluecker_cmd->add_option("degree", degree, "curve degree (>= 2)")->required();
    pluecker_cmd->add_option("--variant", variant, "generic or rational")
        ->check(CLI::IsMember({"generic", "rational"}));

    auto* realize_cmd = app.add_subcommand(
        "realize", "curves whose arc-length differential equals q = h(t) dt^2");
    std::string realize_expr;
    int bound = 1;
    realize_cmd->add_option("expr", realize_expr, "coefficient h(t)")->required();
    realize_cmd->add_option("--bound", bound, "divisor splitting search bound");

    auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled example curves");

    // let --json / --param appear after the subcommand name
    for (CLI::App* sub : {analyze_cmd, rectify_cmd, affine_cmd, evolute_cmd, pluecker_cmd,
                          realize_cmd, corpus_cmd})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) {
            AnalysisReport report = curvediff::analyze(load_spec(file, params), options);
            if (as_json)
                std::cout << curvediff::report_to_json(report).dump(2) << "\n";
            else
                std::cout << curvediff::report_to_text(report);
            return 0;
        }
        if (rectify_cmd->parsed() || affine_cmd->parsed()) {
            AnalysisReport report;
            if (rectify_cmd->parsed() && !raw_expr.empty()) {
                curvediff::KDifferential d(raw_k, curvediff::parse_expr(raw_expr));
                curvediff::DifferentialSection section;
                section.k = raw_k;
                section.coeff = d.coeff;
                section.divisor = curvediff::divisor_of(d);
                section.stratum = curvediff::stratum_of_divisor(section.divisor);
                section.rect = curvediff::summarize_verdict(curvediff::rectify(d));
                report.spec.name = "differential";
                report.spec.x_expr = raw_expr;
                report.spec.y_expr = "0";
                report.euclidean = section;
            } else {
                if (file.empty()) throw curvediff::Error("rectify needs a file or --expr");
                curvediff::AnalyzeOptions o;
                o.affine = rectify_cmd->parsed() ? false : true;
                o.euclidean = rectify_cmd->parsed();
                o.classification = false;
                o.real_divisor = false;
                report = curvediff::analyze(load_spec(file, params), o);
            }
            if (as_json)
                std::cout << curvediff::report_to_json(report).dump(2) << "\n";
            else
                std::cout << curvediff::report_to_text(report);
            return 0;
        }
        if (evolute_cmd->parsed()) {
            curvediff::PlaneCurve curve = curvediff::build_curve(load_spec(file, params));
            auto result = curvediff::evolute(curve);
            if (std::holds_alternative<curvediff::Point2>(result)) {
                const auto& p = std::get<curvediff::Point2>(result);
                if (as_json) {
                    ordered_json j;
                    j["degenerate"] = true;
                    j["point"] = {curvediff::to_string(p.x), curvediff::to_string(p.y)};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "evolute degenerates to the point (" << p.x.get_str() << ", "
                              << p.y.get_str() << ")\n";
                }
            } else {
                const auto& e = std::get<curvediff::PlaneCurve>(result);
                if (as_json) {
                    ordered_json j;
                    j["degenerate"] = false;
                    j["x"] = curvediff::to_expr_string(e.x);
                    j["y"] = curvediff::to_expr_string(e.y);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "x = " << curvediff::to_expr_string(e.x) << "\n";
                    std::cout << "y = " << curvediff::to_expr_string(e.y) << "\n";
                }
            }
            return 0;
        }
        if (pluecker_cmd->parsed()) {
            bool rational = variant == "rational";
            curvediff::PlueckerRecord rec = rational ? curvediff::pluecker_rational(degree)
                                                     : curvediff::pluecker_generic(degree);
            curvediff::EvoluteCounts ev = curvediff::evolute_counts(
                degree, rational ? curvediff::CurveVariant::rational
                                 : curvediff::CurveVariant::generic);
            ordered_json j;
            j["curve"] = pluecker_json(rec);
            j["evolute"] = evolute_json(ev);
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "degree " << rec.degree << " (" << variant << ")\n"
                          << "  genus " << rec.genus << ", class " << rec.curve_class
                          << ", nodes " << rec.nodes << ", cusps " << rec.cusps
                          << ", inflections " << rec.inflections << "\n"
                          << "  dual: nodes " << rec.dual_nodes << ", cusps " << rec.dual_cusps
                          << ", inflections " << rec.dual_inflections << "\n"
                          << "  evolute: degree " << ev.degree << ", class " << ev.curve_class
                          << ", cusps " << ev.cusps << ", nodes " << ev.nodes
                          << ", normals nodes " << ev.normals_nodes;
                if (ev.normals_inflections)
                    std::cout << ", normals inflections " << *ev.normals_inflections;
                std::cout << "\n";
            }
            return 0;
        }
        if (realize_cmd->parsed()) {
            curvediff::KDifferential q(2, curvediff::parse_expr(realize_expr));
            std::vector<curvediff::Realization> found = curvediff::realize_genus0(q, bound);
            if (as_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& r : found) {
                    ordered_json j;
                    j["x"] = curvediff::to_expr_string(r.curve.x);
                    j["y"] = curvediff::to_expr_string(r.curve.y);
                    j["similarity_ratio2"] = curvediff::to_string(r.similarity_ratio2);
                    arr.push_back(j);
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                if (found.empty()) std::cout << "no realization within bound " << bound << "\n";
                for (size_t i = 0; i < found.size(); ++i) {
                    std::cout << "realization " << (i + 1) << ":\n"
                              << "  x = " << curvediff::to_expr_string(found[i].curve.x) << "\n"
                              << "  y = " << curvediff::to_expr_string(found[i].curve.y) << "\n";
                    if (!(found[i].similarity_ratio2 == curvediff::Rat(1)))
                        std::cout << "  (up to similarity, ratio^2 = "
                                  << found[i].similarity_ratio2.get_str() << ")\n";
                }
            }
            return 0;
        }
        if (corpus_cmd->parsed()) {
            curvediff::CorpusSummary summary = curvediff::run_corpus();
            if (as_json) {
                ordered_json arr = ordered_json::array();
                for (const auto& r : summary.results) {
                    ordered_json j;
                    j["name"] = r.name;
                    j["pass"] = r.pass;
                    j["mismatches"] = r.mismatches;
                    if (!r.note.empty()) j["note"] = r.note;
                    arr.push_back(j);
                }
                ordered_json top;
                top["fixtures"] = arr;
                top["all_pass"] = summary.all_pass;
                std::cout << top.dump(2) << "\n";
            } else {
                for (const auto& r : summary.results) {
                    std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << "\n";
                    for (const auto& m : r.mismatches) std::cout << "       " << m << "\n";
                    if (!r.note.empty()) std::cout << "       note: " << r.note << "\n";
                }
                std::cout << (summary.all_pass ? "all fixtures match\n"
                                               : "fixture mismatches found\n");
            }
            return summary.all_pass ? 0 : kExitFixtureMismatch;
        }
    } catch (const curvediff::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysisError;
    }
    return 0;
}
