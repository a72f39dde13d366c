#include "curvediff/analyze.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace curvediff {

using ordered_json = nlohmann::ordered_json;

RectifiabilityReport summarize_verdict(const RectificationVerdict& v) {
    RectifiabilityReport r;
    if (v.is_exact()) {
        r.exact = true;
        r.f = v.exact().f;
        r.primitive_p = v.exact().primitive.p;
        r.primitive_radicand = v.exact().primitive.cpoly;
        r.primitive_scalar = v.exact().primitive.scalar;
        return r;
    }
    const auto& witness = v.not_exact().witness;
    if (std::holds_alternative<ResidueObstruction>(witness)) {
        r.witness_kind = "residue_obstruction";
        r.obstruction_factor = std::get<ResidueObstruction>(witness).factor;
    } else {
        const auto& a = std::get<AnsatzInsolvable>(witness);
        r.witness_kind = "ansatz_insolvable";
        r.system_rows = a.rows;
        r.system_cols = a.cols;
    }
    return r;
}

namespace {

DifferentialSection make_section(const KDifferential& d, bool with_rect) {
    DifferentialSection s;
    s.k = d.k;
    s.coeff = d.coeff;
    s.divisor = divisor_of(d);
    s.stratum = stratum_of_divisor(s.divisor);
    if (with_rect) s.rect = summarize_verdict(rectify(d));
    return s;
}

} // namespace

AnalysisReport analyze(const CurveSpec& spec, const AnalyzeOptions& options) {
    AnalysisReport report;
    report.spec = spec;
    PlaneCurve curve = build_curve(spec);

    if (options.euclidean) {
        KDifferential q = arc_length_qdiff(curve);
        report.euclidean = make_section(q, options.rectifiability);
        for (const auto& [factor, order] : report.euclidean->divisor.finite)
            report.excluded_parameters.push_back(factor);
    }
    if (options.affine) {
        try {
            AffineCubic cubic = affine_cubic_diff(curve);
            report.affine = make_section(cubic.diff, options.rectifiability);
            for (const auto& [factor, order] : report.affine->divisor.finite) {
                bool seen = false;
                for (const QPoly& p : report.excluded_parameters) seen = seen || p == factor;
                if (!seen) report.excluded_parameters.push_back(factor);
            }
        } catch (const ZeroCubicDifferentialError& e) {
            report.affine_error = std::string("affine_cubic_diff: ") + e.what();
        }
    }
    if (options.classification) {
        Classification c = classify_line_circle(curve);
        ClassificationReport cr;
        if (std::holds_alternative<LineVerdict>(c)) {
            const auto& l = std::get<LineVerdict>(c);
            cr.kind = "line";
            cr.line_a = l.a;
            cr.line_b = l.b;
            cr.line_c = l.c;
        } else if (std::holds_alternative<CircleVerdict>(c)) {
            const auto& ci = std::get<CircleVerdict>(c);
            cr.kind = "circle";
            cr.center_x = ci.center.x;
            cr.center_y = ci.center.y;
            cr.radius2 = ci.radius2;
        } else {
            cr.kind = "neither";
        }
        report.classification = cr;
    }
    if (options.real_divisor) {
        RealDivisorReport rd = real_divisor_check(curve);
        RealDivisorSummary summary;
        summary.pass = rd.pass;
        summary.detail = rd.detail;
        for (const auto& e : rd.entries) {
            RealDivisorEntryReport er;
            er.factor = e.at_infinity ? "infinity" : to_string(e.factor);
            er.order = e.order;
            er.real_root_count = e.real_root_count;
            er.parity_ok = e.parity_ok;
            er.dz_order = e.dz_order;
            er.dz_order_ok = e.dz_order_ok;
            summary.entries.push_back(er);
        }
        report.real_divisor = summary;
    }
    return report;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

ordered_json poly_to_json(const QPoly& p) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p.coeff(i)));
    return a;
}

QPoly poly_from_json(const ordered_json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_from_string(c.get<std::string>()));
    return QPoly::from_coeffs(std::move(coeffs));
}

ordered_json ratfunc_to_json(const QRatFunc& f) {
    return ordered_json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

QRatFunc ratfunc_from_json(const ordered_json& j) {
    return QRatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

ordered_json divisor_to_json(const Divisor& d) {
    ordered_json finite = ordered_json::array();
    for (const auto& [f, o] : d.finite)
        finite.push_back(ordered_json{{"factor", poly_to_json(f)}, {"order", o}});
    return ordered_json{{"finite", finite}, {"infinity", d.infinity_order}};
}

Divisor divisor_from_json(const ordered_json& j) {
    Divisor d;
    for (const auto& e : j.at("finite"))
        d.finite.emplace_back(poly_from_json(e.at("factor")), e.at("order").get<int>());
    d.infinity_order = j.at("infinity").get<int>();
    return d;
}

ordered_json rect_to_json(const RectifiabilityReport& r) {
    ordered_json j;
    j["verdict"] = r.exact ? "exact" : "not_exact";
    if (r.exact) {
        j["f"] = ratfunc_to_json(r.f);
        j["primitive"] = ordered_json{{"p", ratfunc_to_json(r.primitive_p)},
                                      {"radicand", poly_to_json(r.primitive_radicand)},
                                      {"scalar", to_string(r.primitive_scalar)}};
    } else {
        j["witness"] = r.witness_kind;
        if (r.witness_kind == "residue_obstruction")
            j["factor"] = poly_to_json(r.obstruction_factor);
        else
            j["system"] = ordered_json{{"rows", r.system_rows}, {"cols", r.system_cols}};
    }
    return j;
}

RectifiabilityReport rect_from_json(const ordered_json& j) {
    RectifiabilityReport r;
    r.exact = j.at("verdict").get<std::string>() == "exact";
    if (r.exact) {
        r.f = ratfunc_from_json(j.at("f"));
        r.primitive_p = ratfunc_from_json(j.at("primitive").at("p"));
        r.primitive_radicand = poly_from_json(j.at("primitive").at("radicand"));
        r.primitive_scalar = rat_from_string(j.at("primitive").at("scalar").get<std::string>());
    } else {
        r.witness_kind = j.at("witness").get<std::string>();
        if (r.witness_kind == "residue_obstruction")
            r.obstruction_factor = poly_from_json(j.at("factor"));
        else {
            r.system_rows = j.at("system").at("rows").get<int>();
            r.system_cols = j.at("system").at("cols").get<int>();
        }
    }
    return r;
}

ordered_json stratum_to_json(const StratumSignature& s) {
    ordered_json a = ordered_json::array();
    for (int o : s.orders) a.push_back(o);
    return a;
}

ordered_json section_to_json(const DifferentialSection& s) {
    ordered_json j;
    j["k"] = s.k;
    j["coeff"] = ratfunc_to_json(s.coeff);
    j["divisor"] = divisor_to_json(s.divisor);
    j["stratum"] = stratum_to_json(s.stratum);
    if (s.rect) j["rectifiability"] = rect_to_json(*s.rect);
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

DifferentialSection section_from_json(const ordered_json& j) {
    DifferentialSection s;
    s.k = j.at("k").get<int>();
    s.coeff = ratfunc_from_json(j.at("coeff"));
    s.divisor = divisor_from_json(j.at("divisor"));
    for (const auto& o : j.at("stratum")) s.stratum.orders.push_back(o.get<int>());
    if (j.contains("rectifiability")) s.rect = rect_from_json(j.at("rectifiability"));
    if (j.contains("note")) s.note = j.at("note").get<std::string>();
    return s;
}

} // namespace

ordered_json report_to_json(const AnalysisReport& report) {
    ordered_json j;
    ordered_json spec;
    spec["name"] = report.spec.name;
    spec["x"] = report.spec.x_expr;
    spec["y"] = report.spec.y_expr;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : report.spec.params) params[k] = to_string(v);
    spec["params"] = params;
    j["curve"] = spec;
    if (report.euclidean) j["euclidean"] = section_to_json(*report.euclidean);
    if (report.affine) j["affine"] = section_to_json(*report.affine);
    if (!report.affine_error.empty()) j["affine_error"] = report.affine_error;
    if (report.classification) {
        const auto& c = *report.classification;
        ordered_json cj;
        cj["kind"] = c.kind;
        if (c.kind == "line")
            cj["line"] = ordered_json{
                {"a", to_string(c.line_a)}, {"b", to_string(c.line_b)}, {"c", to_string(c.line_c)}};
        if (c.kind == "circle")
            cj["circle"] = ordered_json{{"center", {to_string(c.center_x), to_string(c.center_y)}},
                                        {"radius2", to_string(c.radius2)}};
        j["classification"] = cj;
    }
    if (report.real_divisor) {
        const auto& rd = *report.real_divisor;
        ordered_json rj;
        rj["pass"] = rd.pass;
        if (!rd.detail.empty()) rj["detail"] = rd.detail;
        ordered_json entries = ordered_json::array();
        for (const auto& e : rd.entries) {
            ordered_json ej;
            ej["factor"] = e.factor;
            ej["order"] = e.order;
            ej["real_roots"] = e.real_root_count;
            ej["parity_ok"] = e.parity_ok;
            if (e.dz_order) ej["dz_order"] = *e.dz_order;
            ej["dz_order_ok"] = e.dz_order_ok;
            entries.push_back(ej);
        }
        rj["entries"] = entries;
        j["real_divisor"] = rj;
    }
    ordered_json excluded = ordered_json::array();
    for (const QPoly& p : report.excluded_parameters) excluded.push_back(poly_to_json(p));
    j["excluded_parameters"] = excluded;
    return j;
}

AnalysisReport report_from_json(const ordered_json& j) {
    AnalysisReport r;
    const auto& spec = j.at("curve");
    r.spec.name = spec.at("name").get<std::string>();
    r.spec.x_expr = spec.at("x").get<std::string>();
    r.spec.y_expr = spec.at("y").get<std::string>();
    for (const auto& [k, v] : spec.at("params").items())
        r.spec.params[k] = rat_from_string(v.get<std::string>());
    if (j.contains("euclidean")) r.euclidean = section_from_json(j.at("euclidean"));
    if (j.contains("affine")) r.affine = section_from_json(j.at("affine"));
    if (j.contains("affine_error")) r.affine_error = j.at("affine_error").get<std::string>();
    if (j.contains("classification")) {
        const auto& cj = j.at("classification");
        ClassificationReport c;
        c.kind = cj.at("kind").get<std::string>();
        if (c.kind == "line") {
            c.line_a = rat_from_string(cj.at("line").at("a").get<std::string>());
            c.line_b = rat_from_string(cj.at("line").at("b").get<std::string>());
            c.line_c = rat_from_string(cj.at("line").at("c").get<std::string>());
        }
        if (c.kind == "circle") {
            c.center_x = rat_from_string(cj.at("circle").at("center")[0].get<std::string>());
            c.center_y = rat_from_string(cj.at("circle").at("center")[1].get<std::string>());
            c.radius2 = rat_from_string(cj.at("circle").at("radius2").get<std::string>());
        }
        r.classification = c;
    }
    if (j.contains("real_divisor")) {
        const auto& rj = j.at("real_divisor");
        RealDivisorSummary rd;
        rd.pass = rj.at("pass").get<bool>();
        if (rj.contains("detail")) rd.detail = rj.at("detail").get<std::string>();
        for (const auto& ej : rj.at("entries")) {
            RealDivisorEntryReport e;
            e.factor = ej.at("factor").get<std::string>();
            e.order = ej.at("order").get<int>();
            e.real_root_count = ej.at("real_roots").get<int>();
            e.parity_ok = ej.at("parity_ok").get<bool>();
            if (ej.contains("dz_order")) e.dz_order = ej.at("dz_order").get<int>();
            e.dz_order_ok = ej.at("dz_order_ok").get<bool>();
            rd.entries.push_back(e);
        }
        r.real_divisor = rd;
    }
    if (j.contains("excluded_parameters"))
        for (const auto& pj : j.at("excluded_parameters"))
            r.excluded_parameters.push_back(poly_from_json(pj));
    return r;
}

std::string report_to_text(const AnalysisReport& report) {
    std::ostringstream os;
    os << "curve: " << (report.spec.name.empty() ? "(unnamed)" : report.spec.name) << "\n";
    os << "  x = " << report.spec.x_expr << "\n";
    os << "  y = " << report.spec.y_expr << "\n";
    for (const auto& [k, v] : report.spec.params)
        os << "  param " << k << " = " << to_string(v) << "\n";
    auto print_section = [&](const char* title, const DifferentialSection& s) {
        os << title << ":\n";
        os << "  coeff = " << to_expr_string(s.coeff) << "\n";
        os << "  divisor:";
        for (const auto& [f, o] : s.divisor.finite) os << " (" << f << ")^" << o;
        os << ", infinity order " << s.divisor.infinity_order << "\n";
        os << "  stratum = " << s.stratum.str() << "\n";
        if (s.rect) {
            if (s.rect->exact) {
                os << "  rectifiability: exact\n";
                os << "    primitive = (" << to_expr_string(s.rect->primitive_p) << ") * ("
                   << s.rect->primitive_scalar.get_str() << " * ("
                   << s.rect->primitive_radicand << "))^(1/" << s.k << ")\n";
                os << "    f = " << to_expr_string(s.rect->f) << "\n";
            } else {
                os << "  rectifiability: not exact (" << s.rect->witness_kind;
                if (s.rect->witness_kind == "residue_obstruction")
                    os << " at " << s.rect->obstruction_factor;
                os << ")\n";
            }
        }
        if (!s.note.empty()) os << "  note: " << s.note << "\n";
    };
    if (report.euclidean) print_section("arc-length quadratic differential", *report.euclidean);
    if (report.affine) print_section("affine cubic differential", *report.affine);
    if (!report.affine_error.empty()) os << "affine: error: " << report.affine_error << "\n";
    if (report.classification) {
        os << "classification: " << report.classification->kind;
        if (report.classification->kind == "circle")
            os << " center (" << report.classification->center_x.get_str() << ", "
               << report.classification->center_y.get_str() << "), radius^2 "
               << report.classification->radius2.get_str();
        if (report.classification->kind == "line")
            os << " " << report.classification->line_a.get_str() << "*x + "
               << report.classification->line_b.get_str() << "*y = "
               << report.classification->line_c.get_str();
        os << "\n";
    }
    if (report.real_divisor) {
        os << "real divisor check: " << (report.real_divisor->pass ? "pass" : "FAIL");
        if (!report.real_divisor->detail.empty()) os << " (" << report.real_divisor->detail << ")";
        os << "\n";
    }
    if (!report.excluded_parameters.empty()) {
        os << "excluded parameter values at roots of:";
        for (const QPoly& p : report.excluded_parameters) os << " (" << p << ")";
        os << "\n";
    }
    return os.str();
}

} // namespace curvediff
