#include "sevo/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sevo/errors.hpp"

namespace sevo {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

}  // namespace

json to_json(const ModelParams& p) {
  return {{"sigma", number(p.sigma)}, {"delta1", number(p.a == 1 ? p.delta1 : NAN)},
          {"delta2", number(p.b == 1 ? p.delta2 : NAN)}, {"a", p.a}, {"b", p.b}, {"n", p.n}};
}

json to_json(const RateFit& f) {
  return {{"slope", number(f.slope)},
          {"intercept", number(f.intercept)},
          {"max_abs_residual", number(f.max_abs_residual)},
          {"window", {f.window_begin, f.window_end}}};
}

json to_json(const LittleOReport& r) {
  return {{"scaled", numbers(r.scaled)},
          {"ratio_last_first", number(r.ratio_last_first)},
          {"monotone_tail", r.monotone_tail}};
}

json to_json(const NormResult& r) {
  return {{"value", number(r.value)},
          {"abs_error", number(r.abs_error_estimate)},
          {"nodes", r.nodes_used},
          {"truncation_radius", number(r.truncation_radius)},
          {"converged", r.converged}};
}

json to_json(const SuiteReport& r) {
  const SuiteConfig& c = r.config;
  json queries = json::array();
  for (const auto& q : r.queries) {
    json checks = json::array();
    for (const auto& k : q.checks)
      checks.push_back({{"name", k.name}, {"pass", k.pass}, {"observed", number(k.observed)}, {"limit", number(k.limit)}});
    json item = {{"s", q.s},
                 {"j", q.j},
                 {"profile", q.profile},
                 {"theoretical", number(q.theoretical)},
                 {"theoretical_exact", q.theoretical_exact},
                 {"pass", q.pass},
                 {"error", q.error},
                 {"all_converged", q.all_converged},
                 {"checks", checks}};
    if (q.error.empty()) {
      item["solution_fit"] = to_json(q.solution_fit);
      item["zero_mass_fit"] = to_json(q.zero_mass_fit);
      item["little_o"] = to_json(q.little_o);
      item["ratio_window"] = {{"min", number(q.ratio_min)}, {"max", number(q.ratio_max)}};
    }
    queries.push_back(item);
  }
  return {{"kind", "theorem_suite"},
          {"theorem", c.theorem_id},
          {"pass", r.pass},
          {"model", to_json(c.params)},
          {"data", {{"data0", c.data0}, {"data1", c.data1}, {"zero_mass_data1", c.zero_mass_data1}}},
          {"grid", {{"base", c.grid_base}, {"k_min", c.grid_k_min}, {"k_max", c.grid_k_max}, {"t_values", numbers(r.t_values)}}},
          {"fit_points", c.fit_points},
          {"tolerance", {{"rel", c.quadrature.rel_tol}, {"abs", c.quadrature.abs_tol}, {"max_nodes", c.quadrature.max_nodes}}},
          {"thresholds",
           {{"rate_tolerance", c.thresholds.rate_tolerance},
            {"little_o_max", c.thresholds.little_o_max},
            {"ratio_window", c.thresholds.ratio_window},
            {"mass_gap", c.thresholds.mass_gap}}},
          {"queries", queries}};
}

json to_json(const BoundCheckReport& r) {
  return {{"lemma_id", r.lemma_id}, {"line", r.line},         {"s", r.s},
          {"j", r.j},               {"fitted_C", number(r.fitted_C)}, {"fitted_c", number(r.fitted_c)},
          {"max_ratio", number(r.max_ratio)}, {"grid_size", r.grid_size}, {"worst_t", number(r.worst_t)},
          {"worst_r", number(r.worst_r)}, {"note", r.note},       {"pass", r.pass}};
}

json to_json(const L1LemmaReport& r) {
  return {{"t_values", numbers(r.t_values)},         {"inner", numbers(r.inner)},
          {"outer", numbers(r.outer)},               {"inner_scaled", numbers(r.inner_scaled)},
          {"outer_scaled", numbers(r.outer_scaled)}, {"sup_scaled", number(r.sup_scaled)},
          {"inner_argmax", r.inner_argmax},          {"outer_argmax", r.outer_argmax},
          {"pass", r.pass}};
}

json to_json(const ConvolutionLemmaReport& r) {
  return {{"t_values", numbers(r.t_values)}, {"norms", numbers(r.norms)},
          {"alpha", number(r.alpha)},        {"fitted_alpha", number(r.fitted_alpha)},
          {"fitted_beta", number(r.fitted_beta)}, {"hypotheses_hold", r.hypotheses_hold},
          {"little_o", to_json(r.little_o)}, {"drop", number(r.drop)},
          {"identically_zero", r.identically_zero}, {"pass", r.pass}};
}

json to_json(const RiemannLebesgueReport& r) {
  return {{"tau_values", numbers(r.tau_values)}, {"cos_values", numbers(r.cos_values)},
          {"sin_values", numbers(r.sin_values)}, {"relative", numbers(r.relative)},
          {"relative_at_max_tau", number(r.relative_at_max_tau)}, {"tail", to_json(r.tail)},
          {"pass", r.pass}};
}

// ---------------------------------------------------------------- config

namespace {

template <class T>
void read(const json& obj, const char* key, T& dst) {
  if (!obj.contains(key) || obj.at(key).is_null()) return;
  try {
    dst = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

ModelParams model_from_json(const json& j, ModelParams base) {
  if (!j.is_object()) throw DomainError("model must be a JSON object");
  read(j, "sigma", base.sigma);
  read(j, "delta1", base.delta1);
  read(j, "delta2", base.delta2);
  read(j, "a", base.a);
  read(j, "b", base.b);
  read(j, "n", base.n);
  return base;
}

SuiteConfig suite_config_from_json(const json& doc, const std::string& fallback_theorem) {
  if (!doc.is_object()) throw DomainError("config must be a JSON object");
  std::string id = fallback_theorem;
  read(doc, "theorem", id);
  SuiteConfig cfg = SuiteConfig::defaults_for(id);
  if (doc.contains("model")) cfg.params = model_from_json(doc.at("model"), cfg.params);
  if (doc.contains("queries")) {
    if (!doc.at("queries").is_array()) throw DomainError("queries must be an array");
    cfg.queries.clear();
    for (const auto& q : doc.at("queries")) {
      SuiteQuery sq;
      read(q, "s", sq.s);
      read(q, "j", sq.j);
      cfg.queries.push_back(sq);
    }
  }
  read(doc, "data0", cfg.data0);
  read(doc, "data1", cfg.data1);
  read(doc, "zero_mass_data1", cfg.zero_mass_data1);
  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    read(g, "base", cfg.grid_base);
    read(g, "k_min", cfg.grid_k_min);
    read(g, "k_max", cfg.grid_k_max);
  }
  read(doc, "fit_points", cfg.fit_points);
  if (doc.contains("tolerance")) {
    const json& t = doc.at("tolerance");
    read(t, "rel", cfg.quadrature.rel_tol);
    read(t, "abs", cfg.quadrature.abs_tol);
    read(t, "max_nodes", cfg.quadrature.max_nodes);
  }
  if (doc.contains("thresholds")) {
    const json& t = doc.at("thresholds");
    read(t, "rate_tolerance", cfg.thresholds.rate_tolerance);
    read(t, "little_o_max", cfg.thresholds.little_o_max);
    read(t, "ratio_window", cfg.thresholds.ratio_window);
    read(t, "mass_gap", cfg.thresholds.mass_gap);
  }
  return cfg;
}

// ---------------------------------------------------------------- CSV

std::string series_csv(const SuiteReport& r) {
  std::ostringstream os;
  os << "t,s,j,target,value,abs_error,nodes\n";
  for (const auto& row : r.series) {
    os << format_number(row.t) << ',' << format_number(row.s) << ',' << row.j << ',' << row.target << ','
       << format_number(row.value) << ',' << format_number(row.abs_error) << ',' << row.nodes << '\n';
  }
  return os.str();
}

std::string bounds_csv(const std::vector<BoundCheckReport>& reports) {
  std::ostringstream os;
  os << "lemma_id,line,s,j,fitted_C,fitted_c,max_ratio,grid_size,pass\n";
  for (const auto& r : reports) {
    os << r.lemma_id << ',' << r.line << ',' << format_number(r.s) << ',' << r.j << ',' << format_number(r.fitted_C)
       << ',' << format_number(r.fitted_c) << ',' << format_number(r.max_ratio) << ',' << r.grid_size << ','
       << (r.pass ? 1 : 0) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- SVG

std::string suite_svg(const SuiteReport& r) {
  constexpr double W = 640, H = 420, L = 70, R = 20, T = 30, B = 50;
  struct Pt {
    double x, y;
  };
  std::vector<std::vector<Pt>> sets;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& q : r.queries) {
    std::vector<Pt> pts;
    for (const auto& row : r.series) {
      if (row.target == "solution" && row.s == q.s && row.j == q.j && row.value > 0) {
        pts.push_back({std::log10(row.t), std::log10(row.value)});
      }
    }
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    sets.push_back(std::move(pts));
  }
  if (xmin >= xmax) {
    xmin = 0;
    xmax = 1;
  }
  if (ymin >= ymax) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  auto sx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto sy = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << ' ' << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"13\">log10 t</text>\n";
  os << "<text x=\"16\" y=\"" << H / 2 << "\" transform=\"rotate(-90 16 " << H / 2
     << ")\" text-anchor=\"middle\" font-size=\"13\">log10 norm</text>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">Theorem " << r.config.theorem_id
     << " solution norms</text>\n";

  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& q = r.queries[k];
    const char* col = colors[k % 4];
    for (const auto& p : sets[k])
      os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3.5\" fill=\"" << col << "\"/>\n";
    if (!q.error.empty() || sets[k].empty()) continue;
    const double l10 = std::log(10.0);
    auto fit_y = [&](double x) { return (q.solution_fit.intercept + q.solution_fit.slope * x * l10) / l10; };
    const double x0 = sets[k][q.solution_fit.window_begin].x;
    const double x1 = sets[k].back().x;
    os << "<line x1=\"" << sx(x0) << "\" y1=\"" << sy(fit_y(x0)) << "\" x2=\"" << sx(x1) << "\" y2=\"" << sy(fit_y(x1))
       << "\" stroke=\"" << col << "\" stroke-width=\"1.5\"/>\n";
    const Pt last = sets[k].back();
    const double xa = sets[k].front().x;
    const double ya = last.y + q.theoretical * (xa - last.x);
    os << "<line x1=\"" << sx(xa) << "\" y1=\"" << sy(ya) << "\" x2=\"" << sx(last.x) << "\" y2=\"" << sy(last.y)
       << "\" stroke=\"gray\" stroke-dasharray=\"5,4\"/>\n";
    os << "<text x=\"" << W - R - 5 << "\" y=\"" << T + 16 * (k + 1) << "\" text-anchor=\"end\" font-size=\"12\" fill=\""
       << col << "\">s=" << q.s << " j=" << q.j << " slope " << q.solution_fit.slope << " (ref " << q.theoretical
       << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---------------------------------------------------------------- schema

namespace {

bool type_matches(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "null") return v.is_null();
  return false;
}

void check(const json& doc, const json& schema, const std::string& path, std::vector<std::string>& out) {
  if (schema.contains("type")) {
    const json& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(doc, t.get<std::string>());
    } else {
      for (const auto& alt : t) ok = ok || type_matches(doc, alt.get<std::string>());
    }
    if (!ok) {
      out.push_back(path + ": expected type " + t.dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    const auto& e = schema.at("enum");
    if (std::find(e.begin(), e.end(), doc) == e.end()) out.push_back(path + ": value not in enum");
  }
  if (schema.contains("minimum") && doc.is_number() && doc.get<double>() < schema.at("minimum").get<double>())
    out.push_back(path + ": below minimum");
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!doc.contains(key.get<std::string>())) out.push_back(path + ": missing '" + key.get<std::string>() + "'");
      }
    }
    const json props = schema.value("properties", json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        check(it.value(), props.at(it.key()), path + "/" + it.key(), out);
      } else if (schema.contains("additionalProperties") && schema.at("additionalProperties") == false) {
        out.push_back(path + ": unexpected key '" + it.key() + "'");
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i) check(doc[i], schema.at("items"), path + "/" + std::to_string(i), out);
  }
}

}  // namespace

std::vector<std::string> schema_violations(const json& doc, const json& schema) {
  std::vector<std::string> out;
  check(doc, schema, "", out);
  return out;
}

}  // namespace sevo
