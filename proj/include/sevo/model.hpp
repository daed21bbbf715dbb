#pragma once

#include <string>

namespace sevo {

/// Which damping terms are switched on: (a,b) in {(1,0),(0,1),(1,1)}.
enum class DampingCase { A1B0, A0B1, A1B1 };

std::string to_string(DampingCase c);

/// Parameters of u_tt + (-Δ)^σ u + a(-Δ)^δ₁ u_t + b(-Δ)^δ₂ u_t = 0 in n dimensions.
///
/// delta1 is ignored when a == 0 and delta2 when b == 0; validate_params()
/// replaces the unused one with NaN so it cannot leak into a formula.
struct ModelParams {
  double sigma = 1.0;
  double delta1 = 0.25;
  double delta2 = 0.75;
  int a = 1;
  int b = 0;
  int n = 3;

  [[nodiscard]] DampingCase damping_case() const;
  /// Damping symbol a r^{2δ₁} + b r^{2δ₂}.
  [[nodiscard]] double damping(double r) const;
  /// Stiffness symbol r^{2σ}.
  [[nodiscard]] double stiffness(double r) const;
};

/// Checks σ ≥ 1, 0 < δ₁ < σ/2 < δ₂ < σ (for the active terms), (a,b) ≠ (0,0)
/// and n ≥ 1. Throws DomainError naming the violated constraint.
ModelParams validate_params(const ModelParams& p);

}  // namespace sevo
