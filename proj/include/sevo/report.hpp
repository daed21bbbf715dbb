#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sevo/bound_checker.hpp"
#include "sevo/radial_quadrature.hpp"
#include "sevo/rate_lab.hpp"

namespace sevo {

using json = nlohmann::json;

/// Shortest round-trip decimal form ("%.17g"); inf/nan spelled out.
std::string format_number(double v);

json to_json(const ModelParams& p);
json to_json(const RateFit& f);
json to_json(const LittleOReport& r);
json to_json(const NormResult& r);
json to_json(const SuiteReport& r);
json to_json(const BoundCheckReport& r);
json to_json(const L1LemmaReport& r);
json to_json(const ConvolutionLemmaReport& r);
json to_json(const RiemannLebesgueReport& r);

/// Reads model parameters; missing keys keep the values in `base`.
ModelParams model_from_json(const json& j, ModelParams base);
/// Reads a theorem-suite config; missing keys fall back to the defaults of
/// the theorem named in the document (or `fallback_theorem`).
SuiteConfig suite_config_from_json(const json& doc, const std::string& fallback_theorem = "1.1");

/// Header `t,s,j,target,value,abs_error,nodes` and one row per series entry.
std::string series_csv(const SuiteReport& r);
std::string bounds_csv(const std::vector<BoundCheckReport>& reports);

/// Log-log plot of the solution norms with the fitted line and a reference
/// line of the theoretical slope.
std::string suite_svg(const SuiteReport& r);

/// Checks `doc` against a JSON Schema subset (type, required, properties,
/// additionalProperties=false, items, enum, minimum). Returns the violations.
std::vector<std::string> schema_violations(const json& doc, const json& schema);

}  // namespace sevo
