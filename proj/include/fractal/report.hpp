#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fractal/fractal_analysis.hpp"

namespace fractal {

/// JSON tree with the report's field names. NOT-APPLICABLE, SKIPPED and
/// INFINITE are emitted as those strings.
nlohmann::json to_json(const AnalysisReport& report);
/// Inverse of to_json; throws ParseError on a malformed tree.
AnalysisReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<Finding>& findings);

/// Aligned key/value listing plus the per-alpha lattice table.
std::string render_text(const AnalysisReport& report);

/// Psi0 / Psi0* / m1 and m2 tables of the lower bound. Inclusion-minimal
/// transversals are marked with '*' and the minimising rows with '<'.
std::string render_lower_bound_table(const AnalysisReport& report);

std::string render_findings(const std::vector<Finding>& findings);

}  // namespace fractal
