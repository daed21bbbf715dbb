#pragma once

#include <string>
#include <vector>

#include "sevo/data_catalog.hpp"
#include "sevo/model.hpp"
#include "sevo/rate_lab.hpp"
#include "sevo/spectral.hpp"

namespace sevo {

/// Kernel values from direct time integration of the frequency-wise ODE.
struct OdeKernels {
  double t = 0.0;
  double k0 = 0.0;
  double dt_k0 = 0.0;
  double k1 = 0.0;
  double dt_k1 = 0.0;
};

/// Largest step ode_oracle accepts at radius r.
double ode_max_step(const ModelParams& p, double r);

/// Classical RK4 from (1,0) and (0,1) up to t_end <= 10. Throws StepTooLarge
/// when step exceeds ode_max_step and DomainError for t_end outside [0, 10].
OdeKernels ode_oracle(const ModelParams& p, double r, double t_end, double step);

/// One integration reporting the kernels at each of the ascending `times`.
std::vector<OdeKernels> ode_oracle_trajectory(const ModelParams& p, double r, const std::vector<double>& times,
                                              double step);

struct BoundCheckReport {
  std::string lemma_id;
  std::string line;
  double s = 0.0;
  int j = 0;
  double fitted_C = 0.0;
  double fitted_c = 0.0;
  double max_ratio = 0.0;
  std::size_t grid_size = 0;
  double worst_t = 0.0;
  double worst_r = 0.0;
  std::string note;
  bool pass = false;
};

/// Sampling plan. C is fitted as `margin` times the worst ratio on the
/// standard grid; max_ratio is then measured on the validation grid, which
/// extends the zone one more decade toward its open end and adds later times.
struct BoundGrid {
  int r_points = 60;
  std::vector<double> t_values{1, 4, 16, 64, 256, 1024};
  int validation_r_points = 120;
  std::vector<double> validation_t_values{1, 4, 16, 64, 256, 1024, 4096};
  double low_zone_min = 1e-3;
  double validation_low_zone_min = 1e-4;
  double high_zone_span = 100.0;
  double validation_high_zone_span = 1000.0;
  double margin = 2.0;
  /// Added to every right-hand-side power on low-zone lines; nonzero values
  /// are used to confirm that a wrong exponent is detected.
  double exponent_shift = 0.0;
};

struct Zones {
  double r_low = 0.0;
  double r_high = 0.0;
};

/// r_low is half the first discriminant radius, r_high twice the last one
/// (0.5 and 2 when the discriminant never vanishes).
Zones frequency_zones(const ModelParams& p);

/// Pointwise kernel bounds of the given lemma ("2.1", "2.2" or "2.3"), one
/// report per line. The lemma must match the damping case of p.
std::vector<BoundCheckReport> check_kernel_bounds(const ModelParams& p, const std::string& lemma_id, double s, int j,
                                                  const BoundGrid& grid = {});

struct ExpansionTarget {
  std::string id;
  int j;
};

/// Every (target, j) pair with a defined check: pro3.1.1, pro3.1.2 and
/// pro3.6.1 for j = 0, 1 and the four pro3.3.x targets.
std::vector<ExpansionTarget> expansion_targets();

/// Kernel-minus-profile symbol differences on the low-frequency zone.
BoundCheckReport check_expansion_bounds(const ModelParams& p, const std::string& which, int j,
                                        const BoundGrid& grid = {});

/// Model used by default for a lemma or expansion id.
ModelParams default_bound_params(const std::string& id);

struct L1LemmaReport {
  std::vector<double> t_values;
  std::vector<double> inner;
  std::vector<double> outer;
  std::vector<double> inner_scaled;
  std::vector<double> outer_scaled;
  double sup_scaled = 0.0;
  std::size_t inner_argmax = 0;
  std::size_t outer_argmax = 0;
  bool pass = false;
};

/// Integrals of |ξ|^β e^{-c|ξ|^α t} over |ξ| <= 1 and |ξ| >= 1 in R^n, scaled
/// by (1+t)^{(n+β)/α} and t^{(n+β)/α}.
L1LemmaReport check_l1_lemma(double alpha, double beta, double c, int n, const std::vector<double>& t_grid);

struct ConvolutionLemmaReport {
  std::vector<double> t_values;
  std::vector<double> norms;
  double alpha = 0.0;
  double fitted_alpha = 0.0;
  double fitted_beta = 0.0;
  bool hypotheses_hold = false;
  LittleOReport little_o;
  /// scaled.front() / scaled.back().
  double drop = 0.0;
  bool identically_zero = false;
  bool pass = false;
};

/// ‖ r^a Φ̂(t,r) (ĝ(r) - ĝ(0)) ‖ against t^{-α}, where t^{-α} is the exact
/// decay of ‖ r^a Φ̂ ‖.
ConvolutionLemmaReport check_convolution_lemma(const DataSpec& data, ProfileKind kind, const ModelParams& p, double a,
                                               const std::vector<double>& t_grid);

struct RiemannLebesgueReport {
  std::vector<double> tau_values;
  std::vector<double> cos_values;
  std::vector<double> sin_values;
  /// max(|cos|, |sin|) relative to the first tau.
  std::vector<double> relative;
  double relative_at_max_tau = 0.0;
  LittleOReport tail;
  bool pass = false;
};

/// ∫₀^∞ r^w e^{-r^d} cos(rτ) dr and the sine counterpart on each τ.
RiemannLebesgueReport check_riemann_lebesgue(double weight_exponent, double decay_exponent,
                                             const std::vector<double>& tau_grid);

}  // namespace sevo
