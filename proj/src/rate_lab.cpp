#include "sevo/rate_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sevo/data_catalog.hpp"
#include "sevo/errors.hpp"
#include "sevo/spectral.hpp"

namespace sevo {

// ---------------------------------------------------------------- Rational

namespace {

using i128 = __int128;

Rational make_checked(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax) throw DomainError("rational overflow");
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_double(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) throw DomainError("cannot rationalize a non-finite value");
  // Convergents h/k of the continued fraction of x.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-15 && std::abs(x - static_cast<double>(h) / static_cast<double>(k)) > 0.0) {
    const double inv = 1.0 / frac;
    const auto q = static_cast<std::int64_t>(std::floor(inv));
    const std::int64_t k_next = q * k + k_prev;
    if (k_next > max_den || q < 0) break;
    const std::int64_t h_next = q * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - static_cast<double>(q);
  }
  if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) > tol * std::max(1.0, std::abs(x)))
    throw DomainError("value is not a rational with a small denominator");
  return {h, k};
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) {
  return make_checked(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                      static_cast<i128>(a.den_) * b.den_);
}
Rational operator-(Rational a, Rational b) { return a + (-b); }
Rational operator*(Rational a, Rational b) {
  return make_checked(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}
Rational operator/(Rational a, Rational b) {
  return make_checked(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}
bool operator<(Rational a, Rational b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

// ---------------------------------------------------------------- exponents

TimeGrid TimeGrid::geometric(double base, int k_min, int k_max) {
  if (!(base > 1.0) || k_max < k_min) throw DomainError("time grid needs base > 1 and k_min <= k_max");
  TimeGrid g;
  for (int k = k_min; k <= k_max; ++k) g.t_values.push_back(std::pow(base, k));
  return g;
}

template <class T>
T theoretical_exponent_t(DampingCase c, const T& sigma, const T& delta1, const T& delta2, int n, const T& m,
                         const T& s, int j) {
  const T one(1), two(2), zero(0);
  if (m < one || m > two) throw DomainError("m must lie in [1,2]");
  if (!(m < two)) throw DomainError("dimension condition fails: m0 = 2m/(2-m) is infinite at m = 2");
  if (j != 0 && j != 1) throw DomainError("j must be 0 or 1");
  const T m0 = two * m / (two - m);
  const T nn(n);
  const T lp = one / m - one / two;
  if (c == DampingCase::A0B1) {
    if (!(nn > m0 * sigma)) throw DomainError("dimension condition n > m0*sigma fails");
    return zero - nn / (two * delta2) * lp - (s + T(j - 1) * sigma) / (two * delta2);
  }
  if (!(nn > two * m0 * delta1)) throw DomainError("dimension condition n > 2*m0*delta1 fails");
  const T gap = sigma - delta1;
  return zero - nn / (two * gap) * lp - s / (two * gap) - T(j) + delta1 / gap;
}

template double theoretical_exponent_t<double>(DampingCase, const double&, const double&, const double&, int,
                                               const double&, const double&, int);
template Rational theoretical_exponent_t<Rational>(DampingCase, const Rational&, const Rational&, const Rational&,
                                                   int, const Rational&, const Rational&, int);

namespace {

void require_case_params(DampingCase c, const ModelParams& p) {
  if (c == DampingCase::A0B1) {
    if (!std::isfinite(p.delta2)) throw DomainError("case A0B1 needs delta2");
  } else if (!std::isfinite(p.delta1)) {
    throw DomainError("case " + to_string(c) + " needs delta1");
  }
}

}  // namespace

double theoretical_exponent(DampingCase c, const ModelParams& p, double m, double s, int j) {
  require_case_params(c, p);
  return theoretical_exponent_t<double>(c, p.sigma, p.delta1, p.delta2, p.n, m, s, j);
}

Rational theoretical_exponent_exact(DampingCase c, const ModelParams& p, double m, double s, int j) {
  require_case_params(c, p);
  auto q = [](double x) { return std::isfinite(x) ? Rational::from_double(x) : Rational(0); };
  return theoretical_exponent_t<Rational>(c, q(p.sigma), q(p.delta1), q(p.delta2), p.n, q(m), q(s), j);
}

ExponentSpec exponent_spec(DampingCase c, const ModelParams& p, double m, double s, int j) {
  return {c, m, s, j, p.n, theoretical_exponent(c, p, m, s, j)};
}

// ---------------------------------------------------------------- fitting

RateFit fit_rate_tail(const TimeGrid& grid, const std::vector<double>& norms, std::size_t points) {
  if (grid.size() != norms.size()) throw DegenerateFit("grid and norm series differ in length");
  if (points < 3 || points > norms.size()) throw DegenerateFit("a rate fit needs at least 3 points");
  RateFit fit;
  fit.window_end = norms.size();
  fit.window_begin = norms.size() - points;

  std::vector<double> x, y;
  for (std::size_t i = fit.window_begin; i < fit.window_end; ++i) {
    if (!(norms[i] > 0.0) || !std::isfinite(norms[i])) throw DegenerateFit("norms must be positive and finite");
    x.push_back(std::log(grid.t_values[i]));
    y.push_back(std::log(norms[i]));
  }
  const double k = static_cast<double>(points);
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / k;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DegenerateFit("time values in the window coincide");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < x.size(); ++i)
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(y[i] - fit.intercept - fit.slope * x[i]));
  return fit;
}

RateFit fit_rate(const TimeGrid& grid, const std::vector<double>& norms, double window_fraction) {
  if (!(window_fraction > 0.0 && window_fraction <= 1.0)) throw DegenerateFit("window fraction must be in (0,1]");
  const auto points = static_cast<std::size_t>(std::ceil(window_fraction * static_cast<double>(norms.size())));
  return fit_rate_tail(grid, norms, points);
}

LittleOReport little_o_diagnostic(const TimeGrid& grid, const std::vector<double>& diff_norms, double rate) {
  if (grid.size() != diff_norms.size()) throw DomainError("grid and norm series differ in length");
  LittleOReport rep;
  for (std::size_t i = 0; i < diff_norms.size(); ++i)
    rep.scaled.push_back(diff_norms[i] * std::pow(grid.t_values[i], -rate));
  if (rep.scaled.empty()) return rep;

  const double first = rep.scaled.front();
  const double last = rep.scaled.back();
  if (first > 0.0) {
    rep.ratio_last_first = last / first;
  } else {
    rep.ratio_last_first = last == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }

  const std::size_t half = rep.scaled.size() / 2;
  bool nonincreasing = true;
  for (std::size_t i = half + 1; i < rep.scaled.size(); ++i) {
    if (rep.scaled[i] > rep.scaled[i - 1] * (1.0 + 1e-12)) nonincreasing = false;
  }
  rep.monotone_tail = nonincreasing && last < rep.scaled[half] * (1.0 - 1e-9);
  return rep;
}

// ---------------------------------------------------------------- suites

SuiteConfig SuiteConfig::defaults_for(const std::string& theorem_id) {
  SuiteConfig cfg;
  cfg.theorem_id = theorem_id;
  if (theorem_id == "1.1") {
    cfg.params = {2.0, 0.5, 0.75, 1, 0, 3};
    cfg.thresholds = {0.02, 0.15, 1.5, 0.1};
  } else if (theorem_id == "1.2") {
    cfg.params = {1.0, 0.25, 0.75, 0, 1, 3};
    cfg.queries = {{0.0, 0}, {0.0, 1}};
    cfg.thresholds = {0.03, 0.5, 1.5, 0.1};
  } else if (theorem_id == "1.3") {
    cfg.params = {1.0, 0.3, 0.8, 1, 1, 3};
    cfg.thresholds = {0.02, 0.3, 1.5, 0.1};
  } else {
    throw DomainError("unknown theorem id '" + theorem_id + "' (expected 1.1, 1.2 or 1.3)");
  }
  return cfg;
}

void check_suite_preconditions(const SuiteConfig& cfg) {
  const ModelParams p = validate_params(cfg.params);
  const DampingCase c = p.damping_case();
  if (cfg.theorem_id == "1.1") {
    if (c != DampingCase::A1B0) throw DomainError("theorem 1.1 needs (a,b) = (1,0)");
    if (!(p.n > 4.0 * p.delta1)) throw DomainError("theorem 1.1 needs n > 4*delta1");
  } else if (cfg.theorem_id == "1.2") {
    if (c != DampingCase::A0B1) throw DomainError("theorem 1.2 needs (a,b) = (0,1)");
    if (!(p.n > 2.0 * p.sigma)) throw DomainError("theorem 1.2 needs n > 2*sigma");
  } else if (cfg.theorem_id == "1.3") {
    if (c != DampingCase::A1B1) throw DomainError("theorem 1.3 needs (a,b) = (1,1)");
    if (!(p.delta1 + p.delta2 > p.sigma)) throw DomainError("theorem 1.3 needs delta1 + delta2 > sigma");
    if (!(p.n > 4.0 * p.delta1)) throw DomainError("theorem 1.3 needs n > 4*delta1");
  } else {
    throw DomainError("unknown theorem id '" + cfg.theorem_id + "' (expected 1.1, 1.2 or 1.3)");
  }
  if (cfg.queries.empty()) throw DomainError("suite has no queries");
  for (const auto& q : cfg.queries) {
    if (q.j != 0 && q.j != 1) throw DomainError("query j must be 0 or 1");
    if (!(q.s >= 0.0) || !std::isfinite(q.s)) throw DomainError("query s must be >= 0");
  }
  const TimeGrid grid = TimeGrid::geometric(cfg.grid_base, cfg.grid_k_min, cfg.grid_k_max);
  if (cfg.fit_points < 3 || cfg.fit_points > grid.size())
    throw DomainError("fit_points must be between 3 and the grid size");
  catalog_lookup(cfg.data0);
  catalog_lookup(cfg.data1);
  catalog_lookup(cfg.zero_mass_data1);
}

namespace {

constexpr const char* kTargets[] = {"solution", "profile", "difference", "solution_zero_mass"};

void run_query(const SuiteConfig& cfg, const ModelParams& p, const TimeGrid& grid, const SuiteQuery& sq,
               QueryReport& rep, std::vector<SeriesRow>& series) {
  const ProfileKind kind = profile_for(p.damping_case(), sq.j);
  rep.profile = to_string(kind);
  rep.theoretical = theoretical_exponent(p.damping_case(), p, 1.0, sq.s, sq.j);
  try {
    rep.theoretical_exact = theoretical_exponent_exact(p.damping_case(), p, 1.0, sq.s, sq.j).str();
  } catch (const DomainError&) {
    rep.theoretical_exact.clear();
  }

  NormQuery q;
  q.j = sq.j;
  q.s = sq.s;
  q.kind = kind;
  q.data0 = catalog_lookup(cfg.data0);
  const DataSpec data1 = catalog_lookup(cfg.data1);
  const DataSpec zero_mass = catalog_lookup(cfg.zero_mass_data1);

  std::vector<double> sol, prof, diff, sol_zm;
  for (double t : grid.t_values) {
    q.t = t;
    const NormTarget targets[] = {NormTarget::Solution, NormTarget::Profile, NormTarget::Difference,
                                  NormTarget::Solution};
    std::vector<double>* sinks[] = {&sol, &prof, &diff, &sol_zm};
    for (int k = 0; k < 4; ++k) {
      q.target = targets[k];
      q.data1 = k == 3 ? zero_mass : data1;
      const NormResult r = plancherel_norm(p, q, cfg.quadrature);
      sinks[k]->push_back(r.value);
      rep.all_converged = rep.all_converged && r.converged;
      series.push_back({t, sq.s, sq.j, kTargets[k], r.value, r.abs_error_estimate, r.nodes_used, r.converged});
    }
  }

  const SuiteThresholds& th = cfg.thresholds;
  rep.solution_fit = fit_rate_tail(grid, sol, cfg.fit_points);
  const double rate_gap = std::abs(rep.solution_fit.slope - rep.theoretical);
  rep.checks.push_back({"rate", rate_gap <= th.rate_tolerance, rate_gap, th.rate_tolerance});

  rep.little_o = little_o_diagnostic(grid, diff, rep.theoretical);
  rep.checks.push_back(
      {"little_o", rep.little_o.ratio_last_first <= th.little_o_max, rep.little_o.ratio_last_first, th.little_o_max});

  rep.ratio_min = std::numeric_limits<double>::infinity();
  rep.ratio_max = 0.0;
  for (std::size_t i = rep.solution_fit.window_begin; i < rep.solution_fit.window_end; ++i) {
    const double ratio = prof[i] > 0.0 ? sol[i] / prof[i] : std::numeric_limits<double>::infinity();
    rep.ratio_min = std::min(rep.ratio_min, ratio);
    rep.ratio_max = std::max(rep.ratio_max, ratio);
  }
  const double spread = rep.ratio_min > 0.0 ? rep.ratio_max / rep.ratio_min : std::numeric_limits<double>::infinity();
  rep.checks.push_back({"two_sided", rep.ratio_min > 0.0 && spread <= th.ratio_window, spread, th.ratio_window});

  rep.zero_mass_fit = fit_rate_tail(grid, sol_zm, cfg.fit_points);
  const double gain = rep.theoretical - rep.zero_mass_fit.slope;
  rep.checks.push_back({"mass_sensitivity", gain >= th.mass_gap, gain, th.mass_gap});

  rep.checks.push_back({"quadrature_converged", rep.all_converged, rep.all_converged ? 1.0 : 0.0, 1.0});
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace

SuiteReport run_theorem_suite(const SuiteConfig& cfg) {
  check_suite_preconditions(cfg);
  const ModelParams p = validate_params(cfg.params);
  const TimeGrid grid = TimeGrid::geometric(cfg.grid_base, cfg.grid_k_min, cfg.grid_k_max);

  SuiteReport report;
  report.config = cfg;
  report.t_values = grid.t_values;
  for (const auto& sq : cfg.queries) {
    QueryReport rep;
    rep.s = sq.s;
    rep.j = sq.j;
    try {
      run_query(cfg, p, grid, sq, rep, report.series);
    } catch (const std::exception& e) {
      rep.error = e.what();
      rep.pass = false;
    }
    report.queries.push_back(std::move(rep));
  }
  report.pass = std::all_of(report.queries.begin(), report.queries.end(), [](const QueryReport& q) { return q.pass; });
  return report;
}

}  // namespace sevo
