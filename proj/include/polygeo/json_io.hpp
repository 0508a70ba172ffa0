#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polygeo/extremal.hpp"
#include "polygeo/geometry.hpp"
#include "polygeo/operators.hpp"
#include "polygeo/poly.hpp"
#include "polygeo/roots.hpp"

namespace polygeo {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
/// Accepts [re, im] or a bare real.
Complex complex_from_json(const nlohmann::json& j);

/// {"coeffs": [[re, im], ...]} ascending.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// {"n": int, "images": [polynomial, ...]} with n+1 entries. Each image may
/// be a polynomial object or a bare coefficient array.
Json operator_to_json(const MonomialOperator& op);
MonomialOperator operator_from_json(const nlohmann::json& j);

Json functional_to_json(const LinearFunctional& l);
Json zeroset_to_json(const ZeroSet& zs);
Json hull_to_json(const HullPolygon& hull);
Json gauss_lucas_to_json(const GaussLucasReport& report);
Json form_report_to_json(const FormReport& report);
Json refutation_to_json(const RefutationResult& result);
Json probe_to_json(const ProbeResult& result);
Json claim_solutions_to_json(const std::vector<ClaimSolution>& solutions);
Json estimate_to_json(const ExtremalEstimate& est);
Json dnk_table_to_json(const std::vector<DnkRow>& rows);

/// CSV with columns n, k, best_ratio, exactness_flag, degree_used,
/// witness_roots (semicolon-separated re+imi pairs), starts, seed.
std::string dnk_table_to_csv(const std::vector<DnkRow>& rows);
std::string estimate_to_csv(const ExtremalEstimate& est, bool exact, double exact_value);

}  // namespace polygeo
