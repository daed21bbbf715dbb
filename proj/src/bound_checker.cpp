#include "sevo/bound_checker.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "sevo/errors.hpp"
#include "sevo/radial_quadrature.hpp"

namespace sevo {

// ---------------------------------------------------------------- ODE oracle

double ode_max_step(const ModelParams& p, double r) {
  return 1e-3 * std::min(1.0, 1.0 / (p.stiffness(r) + 1.0));
}

namespace {

struct State {
  double y0, v0, y1, v1;
};

State rk4_step(const State& s, double h, double damp, double stiff) {
  auto f = [&](const State& u) {
    return State{u.v0, -damp * u.v0 - stiff * u.y0, u.v1, -damp * u.v1 - stiff * u.y1};
  };
  auto axpy = [](const State& u, double a, const State& k) {
    return State{u.y0 + a * k.y0, u.v0 + a * k.v0, u.y1 + a * k.y1, u.v1 + a * k.v1};
  };
  const State k1 = f(s);
  const State k2 = f(axpy(s, 0.5 * h, k1));
  const State k3 = f(axpy(s, 0.5 * h, k2));
  const State k4 = f(axpy(s, h, k3));
  const double w = h / 6.0;
  return {s.y0 + w * (k1.y0 + 2.0 * k2.y0 + 2.0 * k3.y0 + k4.y0),
          s.v0 + w * (k1.v0 + 2.0 * k2.v0 + 2.0 * k3.v0 + k4.v0),
          s.y1 + w * (k1.y1 + 2.0 * k2.y1 + 2.0 * k3.y1 + k4.y1),
          s.v1 + w * (k1.v1 + 2.0 * k2.v1 + 2.0 * k3.v1 + k4.v1)};
}

}  // namespace

std::vector<OdeKernels> ode_oracle_trajectory(const ModelParams& p, double r, const std::vector<double>& times,
                                              double step) {
  if (!(r >= 0.0)) throw DomainError("ode_oracle: r must be nonnegative");
  if (!(step > 0.0)) throw StepTooLarge("ode_oracle: step must be positive");
  if (step > ode_max_step(p, r)) throw StepTooLarge("ode_oracle: step exceeds 1e-3*min(1, 1/(r^{2sigma}+1))");
  const double damp = p.damping(r);
  const double stiff = p.stiffness(r);

  std::vector<OdeKernels> out;
  State s{1.0, 0.0, 0.0, 1.0};
  double now = 0.0;
  for (double target : times) {
    if (!(target >= now) || target > 10.0) throw DomainError("ode_oracle: times must ascend within [0, 10]");
    const double span = target - now;
    const auto steps = static_cast<long>(std::ceil(span / step));
    const double h = steps > 0 ? span / static_cast<double>(steps) : 0.0;
    for (long i = 0; i < steps; ++i) s = rk4_step(s, h, damp, stiff);
    now = target;
    out.push_back({target, s.y0, s.v0, s.y1, s.v1});
  }
  return out;
}

OdeKernels ode_oracle(const ModelParams& p, double r, double t_end, double step) {
  return ode_oracle_trajectory(p, r, {t_end}, step).front();
}

// ---------------------------------------------------------------- zones

Zones frequency_zones(const ModelParams& p) {
  const auto radii = discriminant_radii(p);
  if (radii.empty()) return {0.5, 2.0};
  return {0.5 * radii.front(), 2.0 * radii.back()};
}

namespace {

std::vector<double> log_space(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo)) throw ZoneEmpty("frequency zone is empty");
  std::vector<double> v(count);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < count; ++i) v[i] = std::exp(a + (b - a) * i / (count - 1));
  return v;
}

/// e^{-c t r^α} r^β, optionally times t; c = coefficient_scale * min over the
/// zone of decay(r)/r^α.
struct RhsTerm {
  double alpha;
  double beta;
  bool times_t;
  std::function<double(double)> decay;
  double c = 0.0;
};

struct Line {
  std::string name;
  bool low_zone;
  std::function<ExpSum(double)> lhs;
  std::vector<RhsTerm> rhs;
  double lhs_weight_power = 0.0;  // r^s multiplying the left side
};

double log_rhs(const std::vector<RhsTerm>& terms, double t, double r) {
  double hi = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  for (const auto& k : terms) {
    double v = -k.c * t * std::pow(r, k.alpha) + k.beta * std::log(r);
    if (k.times_t) v += std::log(t);
    logs.push_back(v);
    hi = std::max(hi, v);
  }
  double acc = 0.0;
  for (double v : logs) acc += std::exp(v - hi);
  return hi + std::log(acc);
}

struct Sweep {
  double sup_log = -std::numeric_limits<double>::infinity();
  double worst_t = 0.0;
  double worst_r = 0.0;
  std::size_t points = 0;
  bool finite = true;
};

Sweep sweep(const Line& line, const std::vector<double>& rs, const std::vector<double>& ts) {
  Sweep sw;
  for (double r : rs) {
    const ExpSum lhs = line.lhs(r);
    for (double t : ts) {
      const double value = lhs.log_abs(t) + line.lhs_weight_power * std::log(r) - log_rhs(line.rhs, t, r);
      ++sw.points;
      if (std::isnan(value) || value == std::numeric_limits<double>::infinity()) {
        sw.finite = false;
        sw.worst_t = t;
        sw.worst_r = r;
        continue;
      }
      if (value > sw.sup_log) {
        sw.sup_log = value;
        sw.worst_t = t;
        sw.worst_r = r;
      }
    }
  }
  return sw;
}

BoundCheckReport run_line(const ModelParams& p, Line line, const std::string& lemma_id, double s, int j,
                          const BoundGrid& grid) {
  const Zones z = frequency_zones(p);
  std::vector<double> rs, rs_val;
  if (line.low_zone) {
    rs = log_space(grid.low_zone_min, z.r_low, grid.r_points);
    rs_val = log_space(grid.validation_low_zone_min, z.r_low, grid.validation_r_points);
  } else {
    rs = log_space(z.r_high, grid.high_zone_span * z.r_high, grid.r_points);
    rs_val = log_space(z.r_high, grid.validation_high_zone_span * z.r_high, grid.validation_r_points);
  }

  double c_min = std::numeric_limits<double>::infinity();
  for (auto& term : line.rhs) {
    double ratio = std::numeric_limits<double>::infinity();
    for (double r : rs_val) ratio = std::min(ratio, term.decay(r) / std::pow(r, term.alpha));
    term.c = 0.25 * ratio;
    c_min = std::min(c_min, term.c);
    if (line.low_zone) term.beta += grid.exponent_shift;
  }

  BoundCheckReport rep;
  rep.lemma_id = lemma_id;
  rep.line = line.name;
  rep.s = s;
  rep.j = j;
  rep.fitted_c = c_min;

  const Sweep fit = sweep(line, rs, grid.t_values);
  const Sweep val = sweep(line, rs_val, grid.validation_t_values);
  rep.grid_size = fit.points;
  rep.worst_t = val.worst_t;
  rep.worst_r = val.worst_r;
  if (!fit.finite || !val.finite || !(c_min > 0.0)) {
    rep.fitted_C = std::numeric_limits<double>::infinity();
    rep.max_ratio = std::numeric_limits<double>::infinity();
    rep.pass = false;
    return rep;
  }
  if (fit.sup_log == -std::numeric_limits<double>::infinity()) {
    // Left side vanishes on the whole grid.
    rep.fitted_C = 0.0;
    rep.max_ratio = val.sup_log == -std::numeric_limits<double>::infinity() ? 0.0
                                                                               : std::numeric_limits<double>::infinity();
  } else {
    const double log_C = std::log(grid.margin) + fit.sup_log;
    rep.fitted_C = std::exp(log_C);
    rep.max_ratio = std::exp(val.sup_log - log_C);
  }
  rep.pass = std::isfinite(rep.fitted_C) && rep.max_ratio <= 1.0;
  return rep;
}

std::function<double(double)> slow_decay(const ModelParams& p) {
  return [p](double r) { return -char_roots(p, r).lambda1.real(); };
}
std::function<double(double)> fast_decay(const ModelParams& p) {
  return [p](double r) { return -char_roots(p, r).lambda2.real(); };
}
std::function<double(double)> min_decay(const ModelParams& p) {
  return [p](double r) {
    const RootPair roots = char_roots(p, r);
    return std::min(-roots.lambda1.real(), -roots.lambda2.real());
  };
}

std::function<ExpSum(double)> piece_lhs(const ModelParams& p, KernelPiece piece, int j) {
  return [p, piece, j](double r) { return kernel_piece(p, r, piece).derivative(j); };
}

}  // namespace

ModelParams default_bound_params(const std::string& id) {
  if (id == "2.1") return {1.0, 0.25, 0.75, 1, 0, 3};
  if (id == "2.2") return {1.0, 0.25, 0.75, 0, 1, 3};
  if (id == "2.3" || id == "pro3.6.1") return {1.0, 0.3, 0.8, 1, 1, 3};
  if (id == "pro3.1.1" || id == "pro3.1.2") return {2.0, 0.5, 0.75, 1, 0, 3};
  if (id.rfind("pro3.3.", 0) == 0) return {1.0, 0.25, 0.75, 0, 1, 3};
  throw DomainError("no default model for '" + id + "'");
}

std::vector<BoundCheckReport> check_kernel_bounds(const ModelParams& params, const std::string& lemma_id, double s,
                                                  int j, const BoundGrid& grid) {
  const ModelParams p = validate_params(params);
  if (j != 0 && j != 1) throw DomainError("j must be 0 or 1");
  if (!(s >= 0.0)) throw DomainError("s must be >= 0");
  const DampingCase dc = p.damping_case();
  const double sg = p.sigma;
  std::vector<Line> lines;
  std::string note;

  if (lemma_id == "2.1" || lemma_id == "2.3") {
    if (lemma_id == "2.1" && dc != DampingCase::A1B0) throw DomainError("lemma 2.1 needs (a,b) = (1,0)");
    if (lemma_id == "2.3" && dc != DampingCase::A1B1) throw DomainError("lemma 2.3 needs (a,b) = (1,1)");
    const double d1 = p.delta1;
    const double slow = 2.0 * (sg - d1);
    const double fast = 2.0 * d1;
    lines.push_back({"low:K0^1", true, piece_lhs(p, KernelPiece::K0_1, j),
                     {{slow, s + j * slow, false, slow_decay(p)}}, 0.0});
    lines.push_back({"low:K0^2", true, piece_lhs(p, KernelPiece::K0_2, j),
                     {{fast, s + j * fast + 2.0 * (sg - 2.0 * d1), false, fast_decay(p)}}, 0.0});
    lines.push_back({"low:K1^1", true, piece_lhs(p, KernelPiece::K1_1, j),
                     {{slow, s + j * slow - 2.0 * d1, false, slow_decay(p)}}, 0.0});
    lines.push_back({"low:K1^2", true, piece_lhs(p, KernelPiece::K1_2, j),
                     {{fast, s + 2.0 * (j - 1) * d1, false, fast_decay(p)}}, 0.0});
    if (lemma_id == "2.1") {
      lines.push_back({"high:K0", false, piece_lhs(p, KernelPiece::K0, j), {{fast, s + j * sg, false, min_decay(p)}}, 0.0});
      lines.push_back(
          {"high:K1", false, piece_lhs(p, KernelPiece::K1, j), {{fast, s + (j - 1) * sg, false, min_decay(p)}}, 0.0});
    }
  } else if (lemma_id == "2.2") {
    if (dc != DampingCase::A0B1) throw DomainError("lemma 2.2 needs (a,b) = (0,1)");
    const double d2 = 2.0 * p.delta2;
    lines.push_back({"low:K0^cos", true, piece_lhs(p, KernelPiece::K0_cos, j),
                     {{d2, s + j * sg, false, min_decay(p)}}, 0.0});
    lines.push_back({"low:K0^sin", true, piece_lhs(p, KernelPiece::K0_sin, j),
                     {{d2, s + (j - 1) * sg + d2, false, min_decay(p)}}, 0.0});
    lines.push_back({"low:K1", true, piece_lhs(p, KernelPiece::K1, j), {{d2, s + (j - 1) * sg, false, min_decay(p)}}, 0.0});
    note = "high-frequency K0 line: 2j*delta read as 2j*delta2";
  } else {
    throw DomainError("unknown lemma id '" + lemma_id + "' (expected 2.1, 2.2 or 2.3)");
  }

  if (lemma_id == "2.2" || lemma_id == "2.3") {
    const double d2 = p.delta2;
    const double slow = 2.0 * (sg - d2);
    const double fast = 2.0 * d2;
    lines.push_back({"high:K0", false, piece_lhs(p, KernelPiece::K0, j),
                     {{slow, s + j * slow, false, slow_decay(p)},
                      {fast, s + j * fast + 2.0 * (sg - 2.0 * d2), false, fast_decay(p)}},
                     0.0});
    lines.push_back({"high:K1", false, piece_lhs(p, KernelPiece::K1, j),
                     {{slow, s + j * slow - 2.0 * d2, false, slow_decay(p)},
                      {fast, s + 2.0 * (j - 1) * d2, false, fast_decay(p)}},
                     0.0});
  }

  std::vector<BoundCheckReport> out;
  for (auto& line : lines) {
    line.lhs_weight_power = s;
    BoundCheckReport rep = run_line(p, line, lemma_id, s, j, grid);
    if (lemma_id == "2.2" && line.name == "high:K0") rep.note = note;
    out.push_back(rep);
  }
  return out;
}

std::vector<ExpansionTarget> expansion_targets() {
  return {{"pro3.1.1", 0}, {"pro3.1.1", 1}, {"pro3.1.2", 0}, {"pro3.1.2", 1}, {"pro3.3.1", 0},
          {"pro3.3.2", 0}, {"pro3.3.3", 1}, {"pro3.3.4", 1}, {"pro3.6.1", 0}, {"pro3.6.1", 1}};
}

BoundCheckReport check_expansion_bounds(const ModelParams& params, const std::string& which, int j,
                                        const BoundGrid& grid) {
  const ModelParams p = validate_params(params);
  const auto targets = expansion_targets();
  const bool known = std::any_of(targets.begin(), targets.end(), [&](const ExpansionTarget& e) { return e.id == which; });
  if (!known) throw DomainError("unknown expansion target '" + which + "'");
  const bool defined = std::any_of(targets.begin(), targets.end(),
                                   [&](const ExpansionTarget& e) { return e.id == which && e.j == j; });
  if (!defined) throw DomainError("expansion target " + which + " is not defined for j=" + std::to_string(j));

  const DampingCase dc = p.damping_case();
  const double sg = p.sigma;
  Line line;
  line.name = which;
  line.low_zone = true;

  if (which == "pro3.1.1" || which == "pro3.1.2" || which == "pro3.6.1") {
    if (which == "pro3.6.1" ? dc != DampingCase::A1B1 : dc != DampingCase::A1B0)
      throw DomainError(which + " does not apply to damping case " + to_string(dc));
    const double d1 = p.delta1;
    const double alpha = 2.0 * (sg - d1);
    auto decay = [p, alpha](double r) {
      return std::min(-char_roots(p, r).lambda1.real(), std::pow(r, alpha));
    };
    const double jj = j * alpha;
    if (which == "pro3.1.2") {
      line.lhs = [p, j](double r) {
        return (kernel_piece(p, r, KernelPiece::K1_1) - profile_expsum(ProfileKind::DiffusionJ0, p, r)).derivative(j);
      };
      line.rhs = {{alpha, 4.0 * (sg - 2.0 * d1) + jj, true, decay}, {alpha, 2.0 * (sg - 3.0 * d1) + jj, false, decay}};
    } else {
      line.lhs = [p, j](double r) {
        return (kernel_piece(p, r, KernelPiece::K0_1) - diffusion_heat_expsum(p, r)).derivative(j);
      };
      line.rhs = {{alpha, 2.0 * (2.0 * sg - 3.0 * d1) + jj, true, decay},
                  {alpha, 2.0 * (sg - 2.0 * d1) + jj, false, decay}};
    }
  } else {
    if (dc != DampingCase::A0B1) throw DomainError(which + " needs (a,b) = (0,1)");
    const double d2 = p.delta2;
    const double alpha = 2.0 * d2;
    auto decay = [p, alpha](double r) {
      return std::min(-char_roots(p, r).lambda1.real(), 0.5 * std::pow(r, alpha));
    };
    if (which == "pro3.3.1") {
      line.lhs = [p](double r) {
        return kernel_piece(p, r, KernelPiece::K0_cos) - profile_expsum(ProfileKind::OscCos, p, r);
      };
      line.rhs = {{alpha, 4.0 * d2 - sg, true, decay}};
    } else if (which == "pro3.3.2") {
      line.lhs = [p](double r) {
        return kernel_piece(p, r, KernelPiece::K1) - profile_expsum(ProfileKind::OscSin, p, r);
      };
      line.rhs = {{alpha, 4.0 * d2 - 2.0 * sg, true, decay}, {alpha, 4.0 * d2 - 3.0 * sg, false, decay}};
    } else if (which == "pro3.3.3") {
      line.lhs = [p](double r) {
        return kernel_piece(p, r, KernelPiece::K0_cos).derivative() + damped_sine_expsum(p, r);
      };
      line.rhs = {{alpha, 4.0 * d2, true, decay}, {alpha, 2.0 * d2, false, decay}};
    } else {
      line.lhs = [p](double r) {
        return kernel_piece(p, r, KernelPiece::K1).derivative() - profile_expsum(ProfileKind::OscCos, p, r);
      };
      line.rhs = {{alpha, 4.0 * d2 - sg, true, decay}, {alpha, 2.0 * d2 - sg, false, decay}};
    }
  }
  return run_line(p, line, which, 0.0, j, grid);
}

// ---------------------------------------------------------------- integral lemmas

L1LemmaReport check_l1_lemma(double alpha, double beta, double c, int n, const std::vector<double>& t_grid) {
  if (!(alpha > 0.0) || !(c > 0.0) || n < 1 || !(n + beta > 0.0))
    throw DomainError("check_l1_lemma needs alpha > 0, c > 0, n >= 1 and n + beta > 0");
  if (t_grid.empty()) throw DomainError("check_l1_lemma needs a nonempty t grid");
  const double sphere = 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
  const double power = (n + beta) / alpha;

  L1LemmaReport rep;
  rep.t_values = t_grid;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("check_l1_lemma needs t > 0");
    auto f = [=](double r) { return std::pow(r, beta) * std::exp(-c * std::pow(r, alpha) * t); };
    RadialIntegrand inner;
    inner.f = [&](double r) { return r <= 1.0 ? f(r) : 0.0; };
    inner.breakpoints = {1.0};
    RadialIntegrand outer;
    outer.f = [&](double r) { return r >= 1.0 ? f(r) : 0.0; };
    outer.breakpoints = {1.0};
    const double vi = sphere * integrate_radial(inner, n).value;
    const double vo = sphere * integrate_radial(outer, n).value;
    rep.inner.push_back(vi);
    rep.outer.push_back(vo);
    rep.inner_scaled.push_back(vi * std::pow(1.0 + t, power));
    rep.outer_scaled.push_back(vo * std::pow(t, power));
  }
  auto argmax = [](const std::vector<double>& v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  };
  rep.inner_argmax = argmax(rep.inner_scaled);
  rep.outer_argmax = argmax(rep.outer_scaled);
  rep.sup_scaled = std::max(rep.inner_scaled[rep.inner_argmax], rep.outer_scaled[rep.outer_argmax]);
  const std::size_t last = t_grid.size() - 1;
  rep.pass = std::isfinite(rep.sup_scaled) && (t_grid.size() == 1 || (rep.inner_argmax != last && rep.outer_argmax != last));
  return rep;
}

namespace {

double profile_decay_exponent(ProfileKind kind, const ModelParams& p, double s) {
  const int j = derivative_order(kind);
  if (kind == ProfileKind::DiffusionJ0 || kind == ProfileKind::DiffusionJ1) return -profile_norm_exponent(p, s, j);
  const double gamma = 2.0 * s + p.n - (kind == ProfileKind::OscSin ? 2.0 * p.sigma : 0.0);
  if (!(gamma > 0.0)) throw DomainError("profile norm diverges");
  return gamma / (4.0 * p.delta2);
}

}  // namespace

ConvolutionLemmaReport check_convolution_lemma(const DataSpec& data, ProfileKind kind, const ModelParams& params,
                                               double a, const std::vector<double>& t_grid) {
  const ModelParams p = validate_params(params);
  if (!(a >= 0.0)) throw DomainError("check_convolution_lemma needs a >= 0");
  if (t_grid.size() < 3) throw DomainError("check_convolution_lemma needs at least 3 times");
  if (kind != profile_for(p.damping_case(), derivative_order(kind)))
    throw DomainError("profile " + to_string(kind) + " does not belong to this damping case");

  ConvolutionLemmaReport rep;
  rep.t_values = t_grid;
  rep.alpha = profile_decay_exponent(kind, p, a);
  const double mass = data.mass;
  const bool oscillating = kind == ProfileKind::OscSin || kind == ProfileKind::OscCos;

  std::vector<double> prof_a, prof_a1;
  NormQuery q;
  q.target = NormTarget::Profile;
  q.kind = kind;
  q.j = derivative_order(kind);
  q.data0 = catalog_lookup("zero");
  q.data1 = catalog_lookup("gaussian");
  for (double t : t_grid) {
    RadialIntegrand in;
    in.f = [&](double r) {
      const double v = std::pow(r, a) * profile_hat(kind, p, t, r) * (data(r) - mass);
      return v * v;
    };
    if (oscillating) in.oscillation_hint = [&](double r) { return t * p.sigma * std::pow(r, p.sigma - 1.0); };
    rep.norms.push_back(std::sqrt(std::max(0.0, integrate_radial(in, p.n).value)));

    q.t = t;
    q.s = a;
    prof_a.push_back(plancherel_norm(p, q).value);
    q.s = a + 1.0;
    prof_a1.push_back(plancherel_norm(p, q).value);
  }

  TimeGrid grid{t_grid};
  const std::size_t tail = (t_grid.size() + 1) / 2;
  const RateFit fa = fit_rate_tail(grid, prof_a, std::max<std::size_t>(3, tail));
  const RateFit fa1 = fit_rate_tail(grid, prof_a1, std::max<std::size_t>(3, tail));
  rep.fitted_alpha = -fa.slope;
  rep.fitted_beta = fa.slope - fa1.slope;
  rep.hypotheses_hold = rep.fitted_alpha > 0.0 && rep.fitted_beta > 0.0 && std::abs(rep.fitted_alpha - rep.alpha) <= 0.05;

  rep.little_o = little_o_diagnostic(grid, rep.norms, -rep.alpha);
  rep.identically_zero = std::all_of(rep.norms.begin(), rep.norms.end(), [](double v) { return v == 0.0; });
  const double back = rep.little_o.scaled.back();
  rep.drop = back > 0.0 ? rep.little_o.scaled.front() / back : std::numeric_limits<double>::infinity();
  if (rep.identically_zero) rep.drop = 0.0;
  rep.pass = rep.hypotheses_hold &&
             (rep.identically_zero || (rep.little_o.ratio_last_first < 1.0 && rep.little_o.monotone_tail));
  return rep;
}

RiemannLebesgueReport check_riemann_lebesgue(double w, double d, const std::vector<double>& tau_grid) {
  if (!(d > 0.0) || !(w > -1.0)) throw DomainError("check_riemann_lebesgue needs decay > 0 and weight > -1");
  if (tau_grid.empty()) throw DomainError("check_riemann_lebesgue needs a nonempty tau grid");
  RiemannLebesgueReport rep;
  rep.tau_values = tau_grid;
  auto f = [=](double r) { return std::pow(r, w) * std::exp(-std::pow(r, d)); };
  QuadratureOptions opt;
  opt.abs_tol = 1e-13 * std::tgamma((w + 1.0) / d) / d;

  std::vector<double> magnitude;
  for (double tau : tau_grid) {
    if (!(tau >= 0.0)) throw DomainError("tau must be >= 0");
    RadialIntegrand ic;
    ic.f = [&](double r) { return f(r) * std::cos(r * tau); };
    ic.envelope = f;
    if (tau > 0.0) ic.oscillation_hint = [tau](double) { return tau; };
    RadialIntegrand is = ic;
    is.f = [&](double r) { return f(r) * std::sin(r * tau); };
    const double vc = integrate_radial(ic, 1, opt).value;
    const double vs = integrate_radial(is, 1, opt).value;
    rep.cos_values.push_back(vc);
    rep.sin_values.push_back(vs);
    magnitude.push_back(std::max(std::abs(vc), std::abs(vs)));
  }
  const double base = magnitude.front();
  for (double m : magnitude) rep.relative.push_back(base > 0.0 ? m / base : 0.0);
  rep.relative_at_max_tau = rep.relative.back();
  std::vector<double> taus = tau_grid;
  rep.tail = little_o_diagnostic(TimeGrid{taus}, magnitude, 0.0);
  rep.pass = rep.relative_at_max_tau < 1.0 && rep.tail.monotone_tail;
  return rep;
}

}  // namespace sevo
