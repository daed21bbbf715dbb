#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sevo/model.hpp"
#include "sevo/radial_quadrature.hpp"

namespace sevo {

/// Exact fraction with a positive denominator, always in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  /// Continued-fraction approximation with denominator <= max_den; throws
  /// DomainError when the best one is further than tol from x.
  static Rational from_double(double x, std::int64_t max_den = 1'000'000, double tol = 1e-12);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  [[nodiscard]] std::string str() const;

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend Rational operator-(Rational a) { return {-a.num_, a.den_}; }
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator<(Rational a, Rational b);
  friend bool operator>(Rational a, Rational b) { return b < a; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Geometric grid base^k, k = k_min..k_max.
struct TimeGrid {
  std::vector<double> t_values;

  static TimeGrid geometric(double base, int k_min, int k_max);
  [[nodiscard]] std::size_t size() const { return t_values.size(); }
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
  /// Half-open index range [window_begin, window_end) of the fitted points.
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
};

struct ExponentSpec {
  DampingCase damping_case = DampingCase::A1B0;
  double m = 1.0;
  double s = 0.0;
  int j = 0;
  int n = 3;
  double value = 0.0;
};

/// Decay exponent of ‖∂ₜʲ|D|^s u(t)‖ for (L^m ∩ L²) data. Works on double
/// or Rational; the dimension condition (n > 2 m₀ δ₁, or n > m₀ σ for A0B1,
/// m₀ = 2m/(2-m)) is enforced with DomainError.
template <class T>
T theoretical_exponent_t(DampingCase c, const T& sigma, const T& delta1, const T& delta2, int n, const T& m,
                         const T& s, int j);

double theoretical_exponent(DampingCase c, const ModelParams& p, double m, double s, int j);
/// Same value in exact arithmetic; inputs are rationalized first.
Rational theoretical_exponent_exact(DampingCase c, const ModelParams& p, double m, double s, int j);
ExponentSpec exponent_spec(DampingCase c, const ModelParams& p, double m, double s, int j);

/// Least squares on (log t, log norm) over the trailing ceil(fraction * N)
/// points. Throws DegenerateFit with fewer than 3 points or a nonpositive norm.
RateFit fit_rate(const TimeGrid& grid, const std::vector<double>& norms, double window_fraction);
/// Same, over the trailing `points` entries.
RateFit fit_rate_tail(const TimeGrid& grid, const std::vector<double>& norms, std::size_t points);

struct LittleOReport {
  std::vector<double> scaled;
  double ratio_last_first = 0.0;
  /// Trailing half nonincreasing and strictly smaller at the end than at the
  /// start of that half.
  bool monotone_tail = false;
};

LittleOReport little_o_diagnostic(const TimeGrid& grid, const std::vector<double>& diff_norms, double rate);

struct SuiteThresholds {
  double rate_tolerance = 0.02;
  double little_o_max = 0.15;
  double ratio_window = 1.5;
  double mass_gap = 0.1;
};

struct SuiteQuery {
  double s = 0.0;
  int j = 0;
};

struct SuiteConfig {
  std::string theorem_id = "1.1";
  ModelParams params;
  std::vector<SuiteQuery> queries{{0.0, 0}};
  std::string data0 = "gaussian";
  std::string data1 = "gaussian";
  std::string zero_mass_data1 = "zero_mass";
  double grid_base = 2.0;
  int grid_k_min = 6;
  int grid_k_max = 16;
  std::size_t fit_points = 6;
  SuiteThresholds thresholds;
  QuadratureOptions quadrature;

  /// Model, thresholds and query list used for the given theorem by default.
  static SuiteConfig defaults_for(const std::string& theorem_id);
};

/// One (query, t, target) norm.
struct SeriesRow {
  double t = 0.0;
  double s = 0.0;
  int j = 0;
  std::string target;
  double value = 0.0;
  double abs_error = 0.0;
  std::int64_t nodes = 0;
  bool converged = true;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double observed = 0.0;
  double limit = 0.0;
};

struct QueryReport {
  double s = 0.0;
  int j = 0;
  std::string profile;
  double theoretical = 0.0;
  std::string theoretical_exact;
  RateFit solution_fit;
  RateFit zero_mass_fit;
  LittleOReport little_o;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  std::vector<CheckResult> checks;
  bool all_converged = true;
  std::string error;
  bool pass = false;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<double> t_values;
  std::vector<QueryReport> queries;
  std::vector<SeriesRow> series;
  bool pass = false;
};

/// Checks the theorem's hypotheses (damping case, dimension condition, and
/// δ₁ + δ₂ > σ for 1.3); throws DomainError on violation.
void check_suite_preconditions(const SuiteConfig& cfg);

/// Runs every query; failures inside a query are recorded, never thrown.
SuiteReport run_theorem_suite(const SuiteConfig& cfg);

}  // namespace sevo
