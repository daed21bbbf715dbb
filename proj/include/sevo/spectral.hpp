#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sevo/model.hpp"

namespace sevo {

using cplx = std::complex<double>;

/// Roots of λ² + (a r^{2δ₁} + b r^{2δ₂}) λ + r^{2σ} = 0 at one radial frequency.
///
/// For real roots lambda1 is the one with the larger real part (the slow
/// root); for a complex pair lambda1 carries +i√|disc|/2.
struct RootPair {
  cplx lambda1;
  cplx lambda2;
  double discriminant = 0.0;
  bool confluent = false;
};

/// Values of K̂₀, K̂₁ and their first time derivatives at (t, r).
struct KernelSet {
  cplx k0;
  cplx k1;
  cplx dt_k0;
  cplx dt_k1;
};

/// Asymptotic profile multipliers.
///   DiffusionJ0  e^{-t r^{2(σ-δ₁)}} / r^{2δ₁}
///   DiffusionJ1  ∂ₜ of DiffusionJ0
///   OscSin       e^{-t r^{2δ₂}/2} sin(t r^σ) / r^σ
///   OscCos       e^{-t r^{2δ₂}/2} cos(t r^σ)
enum class ProfileKind { DiffusionJ0, DiffusionJ1, OscSin, OscCos };

std::string to_string(ProfileKind k);
/// Accepts the enum names and the short forms J0, J1, sin, cos.
ProfileKind parse_profile_kind(const std::string& s);
/// Time-derivative order a profile stands for (0 or 1).
int derivative_order(ProfileKind k);
/// Profile matching a damping case and derivative order.
ProfileKind profile_for(DampingCase c, int j);

RootPair char_roots(const ModelParams& p, double r);

/// φ₁(z) = (e^z - 1)/z, with φ₁(0) = 1.
cplx phi1(cplx z);
/// e^z - 1 without cancellation for small |z|.
cplx expm1(cplx z);

KernelSet kernel_eval(const ModelParams& p, double t, double r);

/// Profile multiplier; throws DomainError for r = 0 on the singular diffusion
/// profiles, for t < 0, and when the kind does not belong to the damping case.
double profile_hat(ProfileKind kind, const ModelParams& p, double t, double r);

/// Two-term small-frequency expansion of -λ₁ (requires a = 1 and r below the
/// first discriminant radius).
double lambda1_low_freq_expansion(const ModelParams& p, double r);

/// Radii where (a r^{2δ₁} + b r^{2δ₂})² - 4 r^{2σ} changes sign, ascending.
std::vector<double> discriminant_radii(const ModelParams& p);

/// A finite sum Σ cₖ e^{μₖ t}; every kernel piece and profile multiplier at a
/// fixed r has this form, which makes time derivatives and log-magnitudes
/// exact.
struct ExpTerm {
  cplx coef;
  cplx rate;
};

class ExpSum {
 public:
  ExpSum() = default;
  explicit ExpSum(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {}

  [[nodiscard]] const std::vector<ExpTerm>& terms() const { return terms_; }
  [[nodiscard]] cplx value(double t) const;
  /// log |Σ cₖ e^{μₖ t}| evaluated without overflow or underflow of the
  /// individual exponentials; -inf for an exact zero.
  [[nodiscard]] double log_abs(double t) const;
  [[nodiscard]] ExpSum derivative(int order = 1) const;

  ExpSum& operator+=(const ExpSum& o);
  ExpSum& operator-=(const ExpSum& o);
  ExpSum& operator*=(cplx factor);

 private:
  std::vector<ExpTerm> terms_;
};

ExpSum operator+(ExpSum lhs, const ExpSum& rhs);
ExpSum operator-(ExpSum lhs, const ExpSum& rhs);
ExpSum operator*(cplx factor, ExpSum rhs);

/// Kernel pieces of the representation formula. K0_1..K1_2 split the
/// kernels by root (cases with a = 1); K0_cos/K0_sin split K̂₀ into its
/// cosine and sine parts (case a = 0, b = 1). Pieces divide by λ₁ - λ₂ and
/// are undefined at a confluent radius.
enum class KernelPiece { K0, K1, K0_1, K0_2, K1_1, K1_2, K0_cos, K0_sin };

std::string to_string(KernelPiece k);

ExpSum kernel_piece(const ModelParams& p, double r, KernelPiece piece);
ExpSum profile_expsum(ProfileKind kind, const ModelParams& p, double r);
/// e^{-t r^{2(σ-δ₁)}}, the heat-type profile of K̂₀¹.
ExpSum diffusion_heat_expsum(const ModelParams& p, double r);
/// e^{-t r^{2δ₂}/2} r^σ sin(t r^σ).
ExpSum damped_sine_expsum(const ModelParams& p, double r);

}  // namespace sevo
