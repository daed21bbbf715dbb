// sevo: command-line front end for the spectral evolution laboratory.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sevo/bound_checker.hpp"
#include "sevo/errors.hpp"
#include "sevo/radial_quadrature.hpp"
#include "sevo/rate_lab.hpp"
#include "sevo/report.hpp"
#include "sevo/spectral.hpp"

namespace {

using namespace sevo;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitFailed = 4;

struct ModelFlags {
  std::optional<double> sigma, delta1, delta2;
  std::optional<int> a, b, n;

  void attach(CLI::App* app) {
    app->add_option("--sigma", sigma, "sigma >= 1");
    app->add_option("--delta1", delta1, "exponent of the first damping term");
    app->add_option("--delta2", delta2, "exponent of the second damping term");
    app->add_option("--a", a, "first damping switch (0 or 1)");
    app->add_option("--b", b, "second damping switch (0 or 1)");
    app->add_option("--n", n, "space dimension");
  }

  [[nodiscard]] ModelParams apply(ModelParams p) const {
    if (sigma) p.sigma = *sigma;
    if (delta1) p.delta1 = *delta1;
    if (delta2) p.delta2 = *delta2;
    if (a) p.a = *a;
    if (b) p.b = *b;
    if (n) p.n = *n;
    return p;
  }

  [[nodiscard]] bool any() const { return sigma || delta1 || delta2 || a || b || n; }
};

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi >= lo) || points < 1) throw DomainError("grid needs 0 < rmin <= rmax and points >= 1");
  std::vector<double> v;
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    v.push_back(std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
  }
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

std::vector<double> powers_of_two(int lo, int hi) {
  std::vector<double> v;
  for (int k = lo; k <= hi; ++k) v.push_back(std::ldexp(1.0, k));
  return v;
}

// ---------------------------------------------------------------- roots

struct RootsCmd {
  ModelFlags model;
  double rmin = 1e-3, rmax = 10.0;
  int points = 50;
  std::vector<double> radii;
  std::string format = "csv";

  int run() const {
    const ModelParams p = validate_params(model.apply({}));
    const auto rs = radii.empty() ? log_grid(rmin, rmax, points) : radii;
    json rows = json::array();
    std::ostringstream csv;
    csv << "r,re_lambda1,im_lambda1,re_lambda2,im_lambda2,discriminant\n";
    for (double r : rs) {
      const RootPair rp = char_roots(p, r);
      csv << format_number(r) << ',' << format_number(rp.lambda1.real()) << ',' << format_number(rp.lambda1.imag())
          << ',' << format_number(rp.lambda2.real()) << ',' << format_number(rp.lambda2.imag()) << ','
          << format_number(rp.discriminant) << '\n';
      rows.push_back({{"r", r},
                      {"lambda1", {rp.lambda1.real(), rp.lambda1.imag()}},
                      {"lambda2", {rp.lambda2.real(), rp.lambda2.imag()}},
                      {"discriminant", rp.discriminant},
                      {"confluent", rp.confluent}});
    }
    if (format == "json") {
      std::cout << json{{"kind", "roots"}, {"model", to_json(p)}, {"rows", rows}}.dump(2) << '\n';
    } else {
      std::cout << csv.str();
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- kernel

struct KernelCmd {
  ModelFlags model;
  double rmin = 1e-3, rmax = 10.0;
  int points = 20;
  std::vector<double> radii;
  std::vector<double> times{1.0};
  std::string format = "csv";

  int run() const {
    const ModelParams p = validate_params(model.apply({}));
    const auto rs = radii.empty() ? log_grid(rmin, rmax, points) : radii;
    json rows = json::array();
    std::ostringstream csv;
    csv << "r,t,k0,k1,dt_k0,dt_k1\n";
    for (double r : rs) {
      for (double t : times) {
        const KernelSet k = kernel_eval(p, t, r);
        csv << format_number(r) << ',' << format_number(t) << ',' << format_number(k.k0.real()) << ','
            << format_number(k.k1.real()) << ',' << format_number(k.dt_k0.real()) << ','
            << format_number(k.dt_k1.real()) << '\n';
        rows.push_back({{"r", r},
                        {"t", t},
                        {"k0", k.k0.real()},
                        {"k1", k.k1.real()},
                        {"dt_k0", k.dt_k0.real()},
                        {"dt_k1", k.dt_k1.real()}});
      }
    }
    if (format == "json") {
      std::cout << json{{"kind", "kernel"}, {"model", to_json(p)}, {"rows", rows}}.dump(2) << '\n';
    } else {
      std::cout << csv.str();
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- norm

struct NormCmd {
  ModelFlags model;
  std::string target = "solution";
  std::string profile;
  std::string data0 = "gaussian", data1 = "gaussian";
  double s = 0.0;
  int j = 0;
  double t = 1.0;
  double tol = 1e-10;
  std::string format = "csv";

  int run() const {
    const ModelParams p = validate_params(model.apply({}));
    NormQuery q;
    q.s = s;
    q.j = j;
    q.t = t;
    if (target == "solution") {
      q.target = NormTarget::Solution;
    } else if (target == "profile") {
      q.target = NormTarget::Profile;
    } else if (target == "difference") {
      q.target = NormTarget::Difference;
    } else {
      throw DomainError("unknown target '" + target + "'");
    }
    q.kind = profile.empty() ? profile_for(p.damping_case(), j) : parse_profile_kind(profile);
    q.data0 = catalog_lookup(data0);
    q.data1 = catalog_lookup(data1);
    QuadratureOptions opt;
    opt.rel_tol = tol;
    const NormResult res = plancherel_norm(p, q, opt);

    if (format == "json") {
      json doc = {{"kind", "norm"},   {"model", to_json(p)}, {"target", target}, {"profile", to_string(q.kind)},
                  {"s", s},           {"j", j},              {"t", t},           {"data0", data0},
                  {"data1", data1},   {"result", to_json(res)}};
      if (q.target == NormTarget::Profile && p.a == 1) {
        doc["closed_form"] = q.data1.mass * profile_norm_closed_form(p, q.kind, s, j, t);
      }
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "t,s,j,target,value,abs_error,nodes\n"
                << format_number(t) << ',' << format_number(s) << ',' << j << ',' << target << ','
                << format_number(res.value) << ',' << format_number(res.abs_error_estimate) << ',' << res.nodes_used
                << '\n';
    }
    if (!res.converged) {
      std::cerr << "tolerance not met: error estimate " << res.abs_error_estimate << '\n';
      return kExitTolerance;
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- rates

struct RatesCmd {
  ModelFlags model;
  double m = 1.0;
  double s = 0.0;
  int j = 0;
  std::string format = "csv";

  int run() const {
    const ModelParams p = validate_params(model.apply({}));
    const DampingCase c = p.damping_case();
    const double value = theoretical_exponent(c, p, m, s, j);
    std::string exact;
    try {
      exact = theoretical_exponent_exact(c, p, m, s, j).str();
    } catch (const DomainError&) {
    }
    if (format == "json") {
      std::cout << json{{"kind", "rates"}, {"case", to_string(c)}, {"model", to_json(p)}, {"m", m},
                        {"s", s},          {"j", j},               {"value", value},      {"exact", exact}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "case,m,s,j,n,value,exact\n"
                << to_string(c) << ',' << format_number(m) << ',' << format_number(s) << ',' << j << ',' << p.n << ','
                << format_number(value) << ',' << exact << '\n';
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- theorem

struct TheoremCmd {
  ModelFlags model;
  std::string id;
  std::string config;
  std::string out;
  std::string svg;
  std::string format;
  std::optional<std::string> data0, data1;
  std::optional<double> tol;

  int run() const {
    json doc = json::object();
    if (!config.empty()) {
      std::ifstream f(config);
      if (!f) throw DomainError("cannot read config " + config);
      try {
        doc = json::parse(f);
      } catch (const json::exception& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
      }
    }
    if (!id.empty()) {
      if (doc.contains("theorem") && doc.at("theorem") != id)
        throw DomainError("--id " + id + " disagrees with the config theorem");
      doc["theorem"] = id;
    }
    if (!doc.contains("theorem")) throw DomainError("theorem id missing (use --id or the config key 'theorem')");
    SuiteConfig cfg = suite_config_from_json(doc);
    cfg.params = model.apply(cfg.params);
    if (data0) cfg.data0 = *data0;
    if (data1) cfg.data1 = *data1;
    if (tol) cfg.quadrature.rel_tol = *tol;

    const SuiteReport rep = run_theorem_suite(cfg);
    const json rj = to_json(rep);
    const std::string csv = series_csv(rep);
    if (!out.empty()) {
      write_file(std::filesystem::path(out) / "report.json", rj.dump(2) + "\n");
      write_file(std::filesystem::path(out) / "series.csv", csv);
    }
    if (!svg.empty()) write_file(svg, suite_svg(rep));

    if (format == "json") {
      std::cout << rj.dump(2) << '\n';
    } else if (format == "csv") {
      std::cout << csv;
    } else {
      for (const auto& q : rep.queries) {
        std::cout << "theorem " << cfg.theorem_id << " s=" << q.s << " j=" << q.j << ": " << (q.pass ? "PASS" : "FAIL");
        if (!q.error.empty()) {
          std::cout << " (" << q.error << ")";
        } else {
          std::cout << " fitted " << q.solution_fit.slope << " vs " << q.theoretical << ", little-o ratio "
                    << q.little_o.ratio_last_first << ", zero-mass " << q.zero_mass_fit.slope;
        }
        std::cout << '\n';
      }
    }
    return rep.pass ? kExitOk : kExitFailed;
  }
};

// ---------------------------------------------------------------- bounds

struct BoundsCmd {
  ModelFlags model;
  std::string lemma;
  std::vector<double> s_values{0.0, 1.0};
  std::vector<int> j_values{0, 1};
  double exponent_shift = 0.0;
  double alpha = 2.0, beta = 0.0, c = 1.0;
  std::string data = "gaussian";
  std::string profile;
  double order = 0.0;
  double weight = 0.0, decay = 1.5;
  std::vector<double> taus{1, 10, 100, 1000, 10000};
  std::string out;
  std::string format;

  int run() const {
    json doc;
    std::string csv;
    bool pass = true;
    if (lemma == "2.1" || lemma == "2.2" || lemma == "2.3" || lemma == "expansions") {
      std::vector<BoundCheckReport> reps;
      BoundGrid grid;
      grid.exponent_shift = exponent_shift;
      if (lemma == "expansions") {
        for (const auto& e : expansion_targets()) {
          reps.push_back(check_expansion_bounds(model.apply(default_bound_params(e.id)), e.id, e.j, grid));
        }
      } else {
        const ModelParams p = model.apply(default_bound_params(lemma));
        for (double s : s_values)
          for (int j : j_values)
            for (auto& r : check_kernel_bounds(p, lemma, s, j, grid)) reps.push_back(r);
      }
      doc = {{"kind", "bounds"}, {"lemma", lemma}, {"reports", json::array()}};
      for (const auto& r : reps) {
        doc["reports"].push_back(to_json(r));
        pass = pass && r.pass;
      }
      csv = bounds_csv(reps);
    } else if (lemma == "A1") {
      const int n = model.n.value_or(1);
      const auto rep = check_l1_lemma(alpha, beta, c, n, powers_of_two(-8, 12));
      doc = {{"kind", "l1_lemma"}, {"alpha", alpha}, {"beta", beta}, {"c", c}, {"n", n}, {"report", to_json(rep)}};
      pass = rep.pass;
      std::ostringstream os;
      os << "t,inner,outer,inner_scaled,outer_scaled\n";
      for (std::size_t i = 0; i < rep.t_values.size(); ++i)
        os << format_number(rep.t_values[i]) << ',' << format_number(rep.inner[i]) << ','
           << format_number(rep.outer[i]) << ',' << format_number(rep.inner_scaled[i]) << ','
           << format_number(rep.outer_scaled[i]) << '\n';
      csv = os.str();
    } else if (lemma == "A2") {
      const ModelParams p = validate_params(model.apply(default_bound_params("pro3.1.1")));
      const ProfileKind kind = profile.empty() ? profile_for(p.damping_case(), 0) : parse_profile_kind(profile);
      const auto rep = check_convolution_lemma(catalog_lookup(data), kind, p, order, powers_of_two(6, 16));
      doc = {{"kind", "convolution_lemma"}, {"data", data},        {"profile", to_string(kind)},
             {"model", to_json(p)},         {"order", order},      {"report", to_json(rep)}};
      pass = rep.pass;
      std::ostringstream os;
      os << "t,norm,scaled\n";
      for (std::size_t i = 0; i < rep.t_values.size(); ++i)
        os << format_number(rep.t_values[i]) << ',' << format_number(rep.norms[i]) << ','
           << format_number(rep.little_o.scaled[i]) << '\n';
      csv = os.str();
    } else if (lemma == "A3") {
      const auto rep = check_riemann_lebesgue(weight, decay, taus);
      doc = {{"kind", "riemann_lebesgue"}, {"weight", weight}, {"decay", decay}, {"report", to_json(rep)}};
      pass = rep.pass;
      std::ostringstream os;
      os << "tau,cos,sin,relative\n";
      for (std::size_t i = 0; i < rep.tau_values.size(); ++i)
        os << format_number(rep.tau_values[i]) << ',' << format_number(rep.cos_values[i]) << ','
           << format_number(rep.sin_values[i]) << ',' << format_number(rep.relative[i]) << '\n';
      csv = os.str();
    } else {
      throw DomainError("unknown lemma '" + lemma + "' (expected 2.1, 2.2, 2.3, expansions, A1, A2 or A3)");
    }
    doc["pass"] = pass;

    if (!out.empty()) {
      write_file(std::filesystem::path(out) / "bounds.json", doc.dump(2) + "\n");
      write_file(std::filesystem::path(out) / "bounds.csv", csv);
    }
    if (format == "json") {
      std::cout << doc.dump(2) << '\n';
    } else if (format == "csv") {
      std::cout << csv;
    } else {
      std::cout << "lemma " << lemma << ": " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitOk : kExitFailed;
  }
};

// ---------------------------------------------------------------- oracle-check

struct OracleCmd {
  ModelFlags model;
  double tol = 1e-6;
  int points = 50;
  std::string format;

  int run() const {
    std::vector<ModelParams> cases;
    if (model.a || model.b) {
      cases.push_back(model.apply({}));
    } else {
      for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
        ModelParams p = model.apply({});
        p.a = a;
        p.b = b;
        cases.push_back(p);
      }
    }
    const std::vector<double> times{0.5, 1.0, 2.0, 5.0};
    json rows = json::array();
    bool pass = true;
    for (const auto& raw : cases) {
      const ModelParams p = validate_params(raw);
      double worst = 0.0;
      for (double r : log_grid(1e-3, 10.0, points)) {
        const auto traj = ode_oracle_trajectory(p, r, times, ode_max_step(p, r));
        for (const auto& o : traj) {
          const KernelSet k = kernel_eval(p, o.t, r);
          worst = std::max({worst, std::abs(k.k0.real() - o.k0), std::abs(k.k1.real() - o.k1),
                            std::abs(k.dt_k0.real() - o.dt_k0), std::abs(k.dt_k1.real() - o.dt_k1)});
        }
      }
      const bool ok = worst <= tol;
      pass = pass && ok;
      rows.push_back({{"case", to_string(p.damping_case())}, {"max_abs_error", worst}, {"pass", ok}});
      if (format != "json")
        std::cout << to_string(p.damping_case()) << " max |kernel - oracle| = " << format_number(worst) << " "
                  << (ok ? "PASS" : "FAIL") << '\n';
    }
    if (format == "json") std::cout << json{{"kind", "oracle_check"}, {"tol", tol}, {"cases", rows}, {"pass", pass}}.dump(2) << '\n';
    return pass ? kExitOk : kExitFailed;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral laboratory for structurally damped sigma-evolution equations"};
  app.require_subcommand(1);
  std::string seed;
  app.add_option("--seed", seed, "reserved; the pipeline is deterministic");

  auto format_check = CLI::IsMember({"csv", "json"});

  RootsCmd roots;
  auto* c_roots = app.add_subcommand("roots", "characteristic roots over an r grid");
  roots.model.attach(c_roots);
  c_roots->add_option("--rmin", roots.rmin);
  c_roots->add_option("--rmax", roots.rmax);
  c_roots->add_option("--points", roots.points);
  c_roots->add_option("--r", roots.radii, "explicit radii (overrides the grid)");
  c_roots->add_option("--format", roots.format)->check(format_check);

  KernelCmd kernel;
  auto* c_kernel = app.add_subcommand("kernel", "kernel values and time derivatives");
  kernel.model.attach(c_kernel);
  c_kernel->add_option("--rmin", kernel.rmin);
  c_kernel->add_option("--rmax", kernel.rmax);
  c_kernel->add_option("--points", kernel.points);
  c_kernel->add_option("--r", kernel.radii, "explicit radii (overrides the grid)");
  c_kernel->add_option("--t", kernel.times, "times");
  c_kernel->add_option("--format", kernel.format)->check(format_check);

  NormCmd norm;
  auto* c_norm = app.add_subcommand("norm", "one Fourier-side L2 norm");
  norm.model.attach(c_norm);
  c_norm->add_option("--target", norm.target)->check(CLI::IsMember({"solution", "profile", "difference"}));
  c_norm->add_option("--profile", norm.profile, "profile kind (default: the one matching the case and j)");
  c_norm->add_option("--data0", norm.data0);
  c_norm->add_option("--data1", norm.data1);
  c_norm->add_option("--s", norm.s);
  c_norm->add_option("--j", norm.j);
  c_norm->add_option("--t", norm.t);
  c_norm->add_option("--tol", norm.tol, "relative tolerance on the squared norm");
  c_norm->add_option("--format", norm.format)->check(format_check);

  RatesCmd rates;
  auto* c_rates = app.add_subcommand("rates", "predicted decay exponent");
  rates.model.attach(c_rates);
  c_rates->add_option("--m", rates.m);
  c_rates->add_option("--s", rates.s);
  c_rates->add_option("--j", rates.j);
  c_rates->add_option("--format", rates.format)->check(format_check);

  TheoremCmd theorem;
  auto* c_theorem = app.add_subcommand("theorem", "run a theorem suite");
  theorem.model.attach(c_theorem);
  c_theorem->add_option("--id", theorem.id)->check(CLI::IsMember({"1.1", "1.2", "1.3"}));
  c_theorem->add_option("--config", theorem.config, "JSON config (see docs/schema/theorem_config.schema.json)");
  c_theorem->add_option("--out", theorem.out, "directory for report.json and series.csv");
  c_theorem->add_option("--svg", theorem.svg, "write a log-log plot here");
  c_theorem->add_option("--format", theorem.format)->check(format_check);
  c_theorem->add_option("--data0", theorem.data0);
  c_theorem->add_option("--data1", theorem.data1);
  c_theorem->add_option("--tol", theorem.tol);

  BoundsCmd bounds;
  auto* c_bounds = app.add_subcommand("bounds", "pointwise kernel bounds and integral lemma checks");
  bounds.model.attach(c_bounds);
  c_bounds->add_option("--lemma", bounds.lemma)->required();
  c_bounds->add_option("--s", bounds.s_values);
  c_bounds->add_option("--j", bounds.j_values);
  c_bounds->add_option("--corrupt", bounds.exponent_shift, "shift added to low-zone bound exponents");
  c_bounds->add_option("--alpha", bounds.alpha);
  c_bounds->add_option("--beta", bounds.beta);
  c_bounds->add_option("--c", bounds.c);
  c_bounds->add_option("--data", bounds.data);
  c_bounds->add_option("--profile", bounds.profile);
  c_bounds->add_option("--order", bounds.order, "Riesz order a of the convolution lemma");
  c_bounds->add_option("--weight", bounds.weight);
  c_bounds->add_option("--decay", bounds.decay);
  c_bounds->add_option("--tau", bounds.taus);
  c_bounds->add_option("--out", bounds.out);
  c_bounds->add_option("--format", bounds.format)->check(format_check);

  OracleCmd oracle;
  auto* c_oracle = app.add_subcommand("oracle-check", "closed-form kernels against the RK4 oracle");
  oracle.model.attach(c_oracle);
  c_oracle->add_option("--tol", oracle.tol);
  c_oracle->add_option("--points", oracle.points);
  c_oracle->add_option("--format", oracle.format)->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_roots->parsed()) return roots.run();
    if (c_kernel->parsed()) return kernel.run();
    if (c_norm->parsed()) return norm.run();
    if (c_rates->parsed()) return rates.run();
    if (c_theorem->parsed()) return theorem.run();
    if (c_bounds->parsed()) return bounds.run();
    if (c_oracle->parsed()) return oracle.run();
  } catch (const NonFiniteIntegrand& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ZoneEmpty& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
