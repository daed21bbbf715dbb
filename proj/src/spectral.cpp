#include "sevo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sevo/errors.hpp"

namespace sevo {

namespace {

constexpr double kConfluentRelTol = 1e-6;
constexpr double kPhiTaylorRadius = 1e-3;
constexpr int kPhiTaylorTerms = 10;

void require_profile_case(ProfileKind kind, const ModelParams& p) {
  const bool diffusion = kind == ProfileKind::DiffusionJ0 || kind == ProfileKind::DiffusionJ1;
  if (diffusion && p.a != 1) throw DomainError("diffusion profiles require a = 1");
  if (!diffusion && !(p.a == 0 && p.b == 1))
    throw DomainError("oscillating profiles require (a,b) = (0,1)");
}

}  // namespace

std::string to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::DiffusionJ0: return "DiffusionJ0";
    case ProfileKind::DiffusionJ1: return "DiffusionJ1";
    case ProfileKind::OscSin: return "OscSin";
    case ProfileKind::OscCos: return "OscCos";
  }
  return "?";
}

ProfileKind parse_profile_kind(const std::string& s) {
  if (s == "DiffusionJ0" || s == "J0") return ProfileKind::DiffusionJ0;
  if (s == "DiffusionJ1" || s == "J1") return ProfileKind::DiffusionJ1;
  if (s == "OscSin" || s == "sin") return ProfileKind::OscSin;
  if (s == "OscCos" || s == "cos") return ProfileKind::OscCos;
  throw DomainError("unknown profile kind '" + s + "'");
}

int derivative_order(ProfileKind k) {
  return (k == ProfileKind::DiffusionJ1 || k == ProfileKind::OscCos) ? 1 : 0;
}

ProfileKind profile_for(DampingCase c, int j) {
  if (c == DampingCase::A0B1) return j == 0 ? ProfileKind::OscSin : ProfileKind::OscCos;
  return j == 0 ? ProfileKind::DiffusionJ0 : ProfileKind::DiffusionJ1;
}

RootPair char_roots(const ModelParams& p, double r) {
  if (!(r >= 0.0)) throw DomainError("char_roots: r must be nonnegative");
  const double damp = p.damping(r);
  const double root_stiff = std::pow(r, p.sigma);
  const double stiff = root_stiff * root_stiff;
  // Factored form keeps the sign exact near the confluent radius.
  const double disc = (damp - 2.0 * root_stiff) * (damp + 2.0 * root_stiff);

  RootPair out;
  out.discriminant = disc;
  if (disc >= 0.0) {
    const double big = -0.5 * (damp + std::sqrt(disc));
    out.lambda2 = big;
    out.lambda1 = big != 0.0 ? stiff / big : 0.0;
  } else {
    const double im = 0.5 * std::sqrt(-disc);
    out.lambda1 = cplx(-0.5 * damp, im);
    out.lambda2 = cplx(-0.5 * damp, -im);
  }
  const double gap = std::abs(out.lambda1 - out.lambda2);
  const double scale = std::abs(out.lambda1) + std::abs(out.lambda2);
  out.confluent = scale == 0.0 || gap <= kConfluentRelTol * scale;
  return out;
}

cplx expm1(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

cplx phi1(cplx z) {
  if (std::abs(z) < kPhiTaylorRadius) {
    // Horner on Σ z^k/(k+1)!, k = 0..9.
    cplx acc = 1.0;
    for (int k = kPhiTaylorTerms - 1; k >= 1; --k) acc = 1.0 + acc * z / static_cast<double>(k + 1);
    return acc;
  }
  return expm1(z) / z;
}

KernelSet kernel_eval(const ModelParams& p, double t, double r) {
  if (!(t >= 0.0)) throw DomainError("kernel_eval: t must be nonnegative");
  const RootPair roots = char_roots(p, r);
  const cplx l1 = roots.lambda1;
  const cplx l2 = roots.lambda2;
  const cplx gap = l1 - l2;
  const cplx z = gap * t;
  const cplx e1 = std::exp(l1 * t);

  KernelSet k;
  // K̂₁ = (e^{λ₁t} - e^{λ₂t})/(λ₁-λ₂) = t e^{λ₁t} φ₁(-(λ₁-λ₂)t); Re(-z) <= 0 keeps φ₁ bounded.
  k.k1 = t * e1 * phi1(-z);
  k.k0 = e1 - l1 * k.k1;
  // Differentiating the exponential form gives -λ₁λ₂ K̂₁; the roots are used
  // as computed, so the system identities remain a real test of them.
  k.dt_k0 = -(l1 * l2) * k.k1;
  if (std::abs(z) >= 1.0) {
    const cplx e2 = std::exp(l2 * t);
    k.dt_k1 = (l1 * e1 - l2 * e2) / gap;
  } else {
    k.dt_k1 = e1 + l2 * k.k1;
  }
  return k;
}

double profile_hat(ProfileKind kind, const ModelParams& p, double t, double r) {
  require_profile_case(kind, p);
  if (!(t >= 0.0)) throw DomainError("profile_hat: t must be nonnegative");
  if (!(r >= 0.0)) throw DomainError("profile_hat: r must be nonnegative");
  switch (kind) {
    case ProfileKind::DiffusionJ0:
    case ProfileKind::DiffusionJ1: {
      if (r == 0.0) throw DomainError("profile_hat: diffusion profile is singular at r = 0");
      const double rho = std::pow(r, 2.0 * (p.sigma - p.delta1));
      const double j0 = std::exp(-t * rho) / std::pow(r, 2.0 * p.delta1);
      return kind == ProfileKind::DiffusionJ0 ? j0 : -rho * j0;
    }
    case ProfileKind::OscSin: {
      const double damp = std::exp(-0.5 * t * std::pow(r, 2.0 * p.delta2));
      if (r == 0.0) return t;
      const double w = std::pow(r, p.sigma);
      return damp * std::sin(t * w) / w;
    }
    case ProfileKind::OscCos: {
      const double damp = std::exp(-0.5 * t * std::pow(r, 2.0 * p.delta2));
      return damp * std::cos(t * std::pow(r, p.sigma));
    }
  }
  return 0.0;
}

std::vector<double> discriminant_radii(const ModelParams& p) {
  // sign(disc) = sign(log(damping) - log 2 - σ log r), scanned in u = log r.
  auto g = [&](double u) { return std::log(p.damping(std::exp(u))) - std::log(2.0) - p.sigma * u; };
  constexpr double kLo = -12.0 * 2.302585092994046;
  constexpr double kHi = 12.0 * 2.302585092994046;
  constexpr int kSteps = 24 * 50;

  std::vector<double> radii;
  double u_prev = kLo;
  double g_prev = g(u_prev);
  for (int i = 1; i <= kSteps; ++i) {
    const double u = kLo + (kHi - kLo) * i / kSteps;
    const double gu = g(u);
    if (gu == 0.0) {
      radii.push_back(std::exp(u));
    } else if ((g_prev < 0.0) != (gu < 0.0) && g_prev != 0.0) {
      double lo = u_prev;
      double hi = u;
      const bool lo_negative = g_prev < 0.0;
      while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      radii.push_back(std::exp(0.5 * (lo + hi)));
    }
    u_prev = u;
    g_prev = gu;
  }
  return radii;
}

double lambda1_low_freq_expansion(const ModelParams& p, double r) {
  if (p.a != 1) throw DomainError("lambda1_low_freq_expansion requires a = 1");
  if (!(r > 0.0)) throw DomainError("lambda1_low_freq_expansion requires r > 0");
  const auto radii = discriminant_radii(p);
  if (!radii.empty() && r >= radii.front())
    throw DomainError("lambda1_low_freq_expansion: r is outside the small-frequency regime");
  if (p.b == 0) {
    return std::pow(r, 2.0 * (p.sigma - p.delta1)) + std::pow(r, 2.0 * (2.0 * p.sigma - 3.0 * p.delta1));
  }
  const double damp = p.damping(r);
  const double stiff = p.stiffness(r);
  return stiff / damp + stiff * stiff / (damp * damp * damp);
}

// ---------------------------------------------------------------------------

cplx ExpSum::value(double t) const {
  cplx acc = 0.0;
  for (const auto& term : terms_) acc += term.coef * std::exp(term.rate * t);
  return acc;
}

double ExpSum::log_abs(double t) const {
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& term : terms_) {
    if (term.coef != 0.0) shift = std::max(shift, term.rate.real() * t);
  }
  if (!std::isfinite(shift)) return -std::numeric_limits<double>::infinity();
  cplx acc = 0.0;
  for (const auto& term : terms_) {
    if (term.coef == 0.0) continue;
    acc += term.coef * std::exp(cplx(term.rate.real() * t - shift, term.rate.imag() * t));
  }
  const double mag = std::abs(acc);
  if (mag == 0.0) return -std::numeric_limits<double>::infinity();
  return shift + std::log(mag);
}

ExpSum ExpSum::derivative(int order) const {
  ExpSum out = *this;
  for (auto& term : out.terms_) {
    for (int i = 0; i < order; ++i) term.coef *= term.rate;
  }
  return out;
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
  for (const auto& term : o.terms_) terms_.push_back({-term.coef, term.rate});
  return *this;
}

ExpSum& ExpSum::operator*=(cplx factor) {
  for (auto& term : terms_) term.coef *= factor;
  return *this;
}

ExpSum operator+(ExpSum lhs, const ExpSum& rhs) { return lhs += rhs; }
ExpSum operator-(ExpSum lhs, const ExpSum& rhs) { return lhs -= rhs; }
ExpSum operator*(cplx factor, ExpSum rhs) { return rhs *= factor; }

std::string to_string(KernelPiece k) {
  switch (k) {
    case KernelPiece::K0: return "K0";
    case KernelPiece::K1: return "K1";
    case KernelPiece::K0_1: return "K0^1";
    case KernelPiece::K0_2: return "K0^2";
    case KernelPiece::K1_1: return "K1^1";
    case KernelPiece::K1_2: return "K1^2";
    case KernelPiece::K0_cos: return "K0^cos";
    case KernelPiece::K0_sin: return "K0^sin";
  }
  return "?";
}

ExpSum kernel_piece(const ModelParams& p, double r, KernelPiece piece) {
  const RootPair roots = char_roots(p, r);
  const cplx l1 = roots.lambda1;
  const cplx l2 = roots.lambda2;
  const cplx gap = l1 - l2;
  switch (piece) {
    case KernelPiece::K0: return ExpSum({{-l2 / gap, l1}, {l1 / gap, l2}});
    case KernelPiece::K1: return ExpSum({{1.0 / gap, l1}, {-1.0 / gap, l2}});
    case KernelPiece::K0_1: return ExpSum({{-l2 / gap, l1}});
    case KernelPiece::K0_2: return ExpSum({{l1 / gap, l2}});
    case KernelPiece::K1_1: return ExpSum({{1.0 / gap, l1}});
    case KernelPiece::K1_2: return ExpSum({{-1.0 / gap, l2}});
    case KernelPiece::K0_cos: return ExpSum({{0.5, l1}, {0.5, l2}});
    case KernelPiece::K0_sin: return ExpSum({{-l2 / gap - 0.5, l1}, {l1 / gap - 0.5, l2}});
  }
  return {};
}

namespace {

// e^{-t r^{2δ₂}/2} e^{±i t r^σ}
std::pair<cplx, cplx> oscillating_rates(const ModelParams& p, double r) {
  const double damp = -0.5 * std::pow(r, 2.0 * p.delta2);
  const double w = std::pow(r, p.sigma);
  return {cplx(damp, w), cplx(damp, -w)};
}

}  // namespace

ExpSum profile_expsum(ProfileKind kind, const ModelParams& p, double r) {
  require_profile_case(kind, p);
  if (!(r > 0.0)) throw DomainError("profile_expsum requires r > 0");
  switch (kind) {
    case ProfileKind::DiffusionJ0:
    case ProfileKind::DiffusionJ1: {
      const double rho = std::pow(r, 2.0 * (p.sigma - p.delta1));
      ExpSum j0({{1.0 / std::pow(r, 2.0 * p.delta1), -rho}});
      return kind == ProfileKind::DiffusionJ0 ? j0 : j0.derivative();
    }
    case ProfileKind::OscSin: {
      const auto [plus, minus] = oscillating_rates(p, r);
      const cplx c = 1.0 / cplx(0.0, 2.0 * std::pow(r, p.sigma));
      return ExpSum({{c, plus}, {-c, minus}});
    }
    case ProfileKind::OscCos: {
      const auto [plus, minus] = oscillating_rates(p, r);
      return ExpSum({{0.5, plus}, {0.5, minus}});
    }
  }
  return {};
}

ExpSum diffusion_heat_expsum(const ModelParams& p, double r) {
  return ExpSum({{1.0, -std::pow(r, 2.0 * (p.sigma - p.delta1))}});
}

ExpSum damped_sine_expsum(const ModelParams& p, double r) {
  const auto [plus, minus] = oscillating_rates(p, r);
  const cplx c = std::pow(r, p.sigma) / cplx(0.0, 2.0);
  return ExpSum({{c, plus}, {-c, minus}});
}

}  // namespace sevo
