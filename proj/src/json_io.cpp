#include "polygeo/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "polygeo/errors.hpp"

namespace polygeo {

namespace {

std::string format_root(Complex z) {
    char buffer[80];
    std::snprintf(buffer, sizeof(buffer), "%.12g%+.12gi", z.real(), z.imag());
    return buffer;
}

const char* provenance_name(DnkProvenance p) {
    return p == DnkProvenance::Exact ? "exact" : "estimated-lower-bound";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::StructurallyNonexpansive: return "structurally-nonexpansive";
        case Verdict::ConditionViolated: return "condition-violated";
        case Verdict::NoCanonicalForm: return "no-canonical-form";
    }
    return "unknown";
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ParseError("expected a complex value as [re, im] or a bare real");
}

Json polynomial_to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const Complex& c : p.coeffs()) coeffs.push_back(complex_to_json(c));
    return Json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    const nlohmann::json* coeffs = nullptr;
    if (j.is_object()) {
        if (!j.contains("coeffs")) throw ParseError("polynomial object lacks \"coeffs\"");
        coeffs = &j.at("coeffs");
    } else if (j.is_array()) {
        coeffs = &j;
    } else {
        throw ParseError("polynomial must be an object with \"coeffs\" or a coefficient array");
    }
    if (!coeffs->is_array()) throw ParseError("polynomial coefficients must be an array");
    std::vector<Complex> values;
    for (const auto& entry : *coeffs) values.push_back(complex_from_json(entry));
    return Polynomial(std::move(values));
}

Json operator_to_json(const MonomialOperator& op) {
    Json images = Json::array();
    for (const Polynomial& img : op.images()) images.push_back(polynomial_to_json(img));
    return Json{{"n", op.n()}, {"images", images}};
}

MonomialOperator operator_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("images")) {
        throw ParseError("operator must be an object with \"n\" and \"images\"");
    }
    if (!j.at("n").is_number_integer()) throw ParseError("operator \"n\" must be an integer");
    const int n = j.at("n").get<int>();
    const auto& images_json = j.at("images");
    if (!images_json.is_array()) throw ParseError("operator \"images\" must be an array");
    if (n < 0 || images_json.size() != static_cast<std::size_t>(n) + 1) {
        throw ParseError("operator needs exactly n+1 images");
    }
    std::vector<Polynomial> images;
    for (const auto& img : images_json) images.push_back(polynomial_from_json(img));
    return {n, std::move(images)};
}

Json functional_to_json(const LinearFunctional& l) {
    Json weights = Json::array();
    for (const Complex& w : l.weights) weights.push_back(complex_to_json(w));
    return Json{{"weights", weights}};
}

Json zeroset_to_json(const ZeroSet& zs) {
    Json points = Json::array();
    for (const RootCluster& p : zs.points) {
        points.push_back(Json{{"location", complex_to_json(p.location)},
                              {"multiplicity", p.multiplicity}});
    }
    return Json{{"points", points},
                {"cluster_radius", zs.cluster_radius},
                {"residual_bound", zs.residual_bound}};
}

Json hull_to_json(const HullPolygon& hull) {
    Json vertices = Json::array();
    for (const Complex& v : hull.vertices) vertices.push_back(complex_to_json(v));
    return Json{{"vertices", vertices}};
}

Json gauss_lucas_to_json(const GaussLucasReport& report) {
    return Json{{"pass", report.pass},
                {"tol", report.tol},
                {"margins", report.margins},
                {"roots", zeroset_to_json(report.roots)},
                {"critical_points", zeroset_to_json(report.critical_points)},
                {"hull", hull_to_json(report.hull)}};
}

Json form_report_to_json(const FormReport& report) {
    Json matches = Json::array();
    if (report.form1) {
        matches.push_back(Json{{"form", "form1"},
                               {"l1", functional_to_json(report.form1->l1)},
                               {"l2", functional_to_json(report.form1->l2)}});
    }
    if (report.form2) {
        matches.push_back(Json{{"form", "form2"},
                               {"c", complex_to_json(report.form2->c)},
                               {"m", report.form2->m},
                               {"l3", functional_to_json(report.form2->l3)}});
    }
    if (report.form3) {
        matches.push_back(Json{{"form", "form3"},
                               {"c", complex_to_json(report.form3->c)},
                               {"k", report.form3->k},
                               {"map", Json{{"a", complex_to_json(report.form3->map.a)},
                                            {"b", complex_to_json(report.form3->map.b)}}}});
    }
    Json dnk = nullptr;
    if (report.dnk_used) {
        dnk = Json{{"n", report.dnk_used->n},
                   {"k", report.dnk_used->k},
                   {"value", report.dnk_used->value.value},
                   {"provenance", provenance_name(report.dnk_used->value.provenance)}};
    }
    return Json{{"matches", matches},
                {"verdict", verdict_name(report.verdict)},
                {"conditional", report.conditional},
                {"detail", report.detail},
                {"dnk_used", dnk}};
}

Json refutation_to_json(const RefutationResult& result) {
    Json ce = nullptr;
    if (result.counterexample) {
        const Counterexample& c = *result.counterexample;
        ce = Json{{"polynomial", polynomial_to_json(c.p)},
                  {"diam_zp", c.diam_p},
                  {"diam_zlp", c.diam_lp},
                  {"ratio", c.diam_p > 0.0 ? c.diam_lp / c.diam_p : 0.0},
                  {"trial_index", c.trial_index},
                  {"family", c.label}};
    }
    return Json{{"found", result.counterexample.has_value()},
                {"counterexample", ce},
                {"trials_run", result.trials_run},
                {"skipped_constant", result.skipped_constant},
                {"skipped_solver", result.skipped_solver},
                {"note", result.note}};
}

Json probe_to_json(const ProbeResult& result) {
    Json violations = Json::array();
    for (const ProbeViolation& v : result.violations) {
        violations.push_back(Json{{"s", v.s},
                                  {"alpha", complex_to_json(v.alpha)},
                                  {"distinct_zeros", v.distinct_zeros}});
    }
    return Json{{"violations", violations},
                {"cases_run", result.cases_run},
                {"skipped", result.skipped}};
}

Json claim_solutions_to_json(const std::vector<ClaimSolution>& solutions) {
    Json out = Json::array();
    for (const ClaimSolution& s : solutions) {
        out.push_back(Json{{"d", complex_to_json(s.d)},
                           {"gamma", complex_to_json(s.gamma)},
                           {"delta", complex_to_json(s.delta)},
                           {"residual", s.residual}});
    }
    return out;
}

Json estimate_to_json(const ExtremalEstimate& est) {
    Json witness = Json::array();
    for (const Complex& r : est.witness_roots) witness.push_back(complex_to_json(r));
    return Json{{"n", est.n},
                {"k", est.k},
                {"best_ratio", est.best_ratio},
                {"witness_roots", witness},
                {"degree_used", est.degree_used},
                {"starts", est.starts},
                {"seed", est.seed},
                {"converged_fraction", est.converged_fraction},
                {"evaluations", est.evaluations},
                {"failed_evaluations", est.failed_evaluations}};
}

Json dnk_table_to_json(const std::vector<DnkRow>& rows) {
    Json out = Json::array();
    for (const DnkRow& row : rows) {
        Json entry = estimate_to_json(row.estimate);
        entry["exactness"] = row.exact ? "EXACT" : "ESTIMATE";
        entry["exact_value"] = row.exact ? Json(row.exact_value) : Json(nullptr);
        out.push_back(std::move(entry));
    }
    return Json{{"rows", out}};
}

std::string estimate_to_csv(const ExtremalEstimate& est, bool exact, double exact_value) {
    std::ostringstream os;
    os.precision(17);
    os << est.n << "," << est.k << "," << est.best_ratio << ","
       << (exact ? "EXACT" : "ESTIMATE") << "," << est.degree_used << ",";
    for (std::size_t i = 0; i < est.witness_roots.size(); ++i) {
        if (i > 0) os << ";";
        os << format_root(est.witness_roots[i]);
    }
    os << "," << est.starts << "," << est.seed;
    (void)exact_value;
    return os.str();
}

std::string dnk_table_to_csv(const std::vector<DnkRow>& rows) {
    std::ostringstream os;
    os << "n,k,best_ratio,exactness_flag,degree_used,witness_roots,starts,seed\n";
    for (const DnkRow& row : rows) {
        os << estimate_to_csv(row.estimate, row.exact, row.exact_value) << "\n";
    }
    return os.str();
}

}  // namespace polygeo
