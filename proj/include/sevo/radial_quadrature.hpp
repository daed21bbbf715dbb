#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sevo/data_catalog.hpp"
#include "sevo/model.hpp"
#include "sevo/spectral.hpp"

namespace sevo {

/// Accuracy target on an integral I: stop once err <= max(abs, rel*|I|).
struct QuadratureOptions {
  double abs_tol = 0.0;
  double rel_tol = 1e-10;
  std::int64_t max_nodes = 2'000'000;
  /// Truncate where envelope * r^{n-1} drops below this fraction of its peak.
  double truncation_rel = 1e-18;
};

struct NormResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t nodes_used = 0;
  double truncation_radius = 0.0;
  /// False when the node budget ran out before the tolerance was met; value
  /// then holds the best estimate.
  bool converged = true;
};

/// Integrand over r in (0, inf) plus the side information the integrator uses
/// to lay out panels.
struct RadialIntegrand {
  std::function<double(double)> f;
  /// Nonnegative majorant of |f| used to pick the truncation radius; |f| when
  /// empty.
  std::function<double(double)> envelope;
  /// Phase derivative of an oscillating factor; panels are cut to at most a
  /// quarter period. Values <= 0 mean no oscillation at that r.
  std::function<double(double)> oscillation_hint;
  /// Radii where f loses smoothness (e.g. discriminant radii).
  std::vector<double> breakpoints;
};

/// ∫₀^∞ f(r) r^{n-1} dr by globally adaptive Gauss-Kronrod (7/15) panels.
/// Throws NonFiniteIntegrand on a NaN/inf sample or a non-decaying envelope.
NormResult integrate_radial(const RadialIntegrand& integrand, int n, const QuadratureOptions& opt = {});

NormResult integrate_radial(const std::function<double(double)>& f, int n, const QuadratureOptions& opt = {},
                            const std::function<double(double)>& oscillation_hint = {});

enum class NormTarget { Solution, Profile, Difference };

std::string to_string(NormTarget t);

/// ‖ |D|^s ∂ₜʲ(·) ‖ on the Fourier side. Profile and Difference use the
/// profile `kind`, whose derivative order must equal j; the profile is
/// weighted by the mass of data1.
struct NormQuery {
  int j = 0;
  double s = 0.0;
  double t = 1.0;
  NormTarget target = NormTarget::Solution;
  ProfileKind kind = ProfileKind::DiffusionJ0;
  DataSpec data0;
  DataSpec data1;
};

NormResult plancherel_norm(const ModelParams& p, const NormQuery& q, const QuadratureOptions& opt = {});

/// Exact ‖ |D|^s ∂ₜʲ e^{-t r^{2(σ-δ₁)}} r^{-2δ₁} ‖ (unit mass); requires a = 1
/// and 2s - 4δ₁ + 4j(σ-δ₁) + n > 0.
double profile_norm_closed_form(const ModelParams& p, ProfileKind kind, double s, int j, double t);

/// Norm of the oscillating profile with sin² or cos² replaced by 1
/// (requires a = 0, b = 1).
double oscillatory_envelope_norm(const ModelParams& p, ProfileKind kind, double s, double t);

/// Exponent of t in profile_norm_closed_form.
double profile_norm_exponent(const ModelParams& p, double s, int j);

}  // namespace sevo
