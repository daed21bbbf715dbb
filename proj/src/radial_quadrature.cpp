#include "sevo/radial_quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "sevo/errors.hpp"

namespace sevo {

namespace {

constexpr int kRuleNodes = 15;
constexpr int kGradingLevels = 40;
constexpr double kScanLogMin = -12.0;
constexpr double kScanLogMax = 12.0;
constexpr int kScanPerDecade = 40;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

class PanelRule {
 public:
  PanelRule(const std::function<double(double)>& f, int n) : f_(f), n_(n) {}

  Panel operator()(double a, double b) {
    auto g = [this](double r) {
      const double v = f_(r) * std::pow(r, n_ - 1);
      if (!std::isfinite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << "integrand is not finite at r=" << r;
        throw NonFiniteIntegrand(os.str());
      }
      return v;
    };
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, kRuleNodes>::integrate(g, a, b, 0, 0.0, &err);
    nodes_ += kRuleNodes;
    // A depth-0 call reports |K - G| on the reference interval; rescale.
    return {a, b, v, err * 0.5 * (b - a)};
  }

  [[nodiscard]] std::int64_t nodes() const { return nodes_; }

 private:
  const std::function<double(double)>& f_;
  int n_;
  std::int64_t nodes_ = 0;
};

double truncation_radius(const std::function<double(double)>& env, int n, double rel) {
  const int steps = static_cast<int>((kScanLogMax - kScanLogMin) * kScanPerDecade);
  std::vector<double> w(steps + 1);
  double peak = 0.0;
  for (int k = 0; k <= steps; ++k) {
    const double r = std::pow(10.0, kScanLogMin + static_cast<double>(k) / kScanPerDecade);
    const double v = env(r) * std::pow(r, n - 1);
    if (std::isnan(v)) throw NonFiniteIntegrand("integrand envelope is NaN");
    w[k] = v;
    peak = std::max(peak, v);
  }
  if (peak == 0.0) return 0.0;
  if (!std::isfinite(peak)) throw NonFiniteIntegrand("integrand envelope is unbounded");
  int last = 0;
  for (int k = steps; k >= 0; --k) {
    if (w[k] >= rel * peak) {
      last = k;
      break;
    }
  }
  if (last == steps) throw NonFiniteIntegrand("integrand envelope does not decay");
  return std::pow(10.0, kScanLogMin + static_cast<double>(last + 1) / kScanPerDecade);
}

std::vector<double> initial_edges(double R, const std::vector<double>& breakpoints,
                                  const std::function<double(double)>& hint) {
  std::vector<double> edges{0.0, R};
  for (int k = 1; k <= kGradingLevels; ++k) edges.push_back(std::ldexp(R, -k));
  for (double b : breakpoints) {
    if (b > 0.0 && b < R) edges.push_back(b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (!hint) return edges;

  std::vector<double> out{edges.front()};
  for (std::size_t i = 1; i < edges.size(); ++i) {
    double x = edges[i - 1];
    const double b = edges[i];
    while (x < b) {
      double phase_rate = hint(x);
      double next = b;
      if (phase_rate > 0.0) {
        double width = M_PI / (2.0 * phase_rate);
        const double mid_rate = hint(x + 0.5 * width);
        if (mid_rate > phase_rate) width = M_PI / (2.0 * mid_rate);
        next = std::min(b, x + width);
      }
      if (!(next > x)) next = b;
      out.push_back(next);
      x = next;
    }
  }
  return out;
}

}  // namespace

NormResult integrate_radial(const RadialIntegrand& in, int n, const QuadratureOptions& opt) {
  if (n < 1) throw DomainError("integrate_radial: n must be >= 1");
  if (!in.f) throw DomainError("integrate_radial: empty integrand");
  std::function<double(double)> env = in.envelope;
  if (!env) env = [&in](double r) { return std::abs(in.f(r)); };

  NormResult res;
  const double R = truncation_radius(env, n, opt.truncation_rel);
  if (R == 0.0) {
    res.truncation_radius = 1.0;
    return res;
  }
  res.truncation_radius = R;

  PanelRule rule(in.f, n);
  std::priority_queue<Panel> heap;
  long double total = 0.0L;
  long double total_err = 0.0L;
  const auto edges = initial_edges(R, in.breakpoints, in.oscillation_hint);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    Panel p = rule(edges[i - 1], edges[i]);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(static_cast<double>(total))); };
  bool stuck = false;
  while (static_cast<double>(total_err) > target()) {
    if (rule.nodes() + 2 * kRuleNodes > opt.max_nodes) break;
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      stuck = true;
      break;
    }
    heap.pop();
    Panel left = rule(worst.a, mid);
    Panel right = rule(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the panels to shed drift from the running updates.
  long double sum = 0.0L;
  long double err = 0.0L;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  res.value = static_cast<double>(sum);
  res.abs_error_estimate = static_cast<double>(err);
  res.nodes_used = rule.nodes();
  res.converged = !stuck && res.abs_error_estimate <= std::max(opt.abs_tol, opt.rel_tol * std::abs(res.value));
  return res;
}

NormResult integrate_radial(const std::function<double(double)>& f, int n, const QuadratureOptions& opt,
                            const std::function<double(double)>& oscillation_hint) {
  RadialIntegrand in;
  in.f = f;
  in.oscillation_hint = oscillation_hint;
  return integrate_radial(in, n, opt);
}

std::string to_string(NormTarget t) {
  switch (t) {
    case NormTarget::Solution: return "solution";
    case NormTarget::Profile: return "profile";
    case NormTarget::Difference: return "difference";
  }
  return "?";
}

NormResult plancherel_norm(const ModelParams& params, const NormQuery& q, const QuadratureOptions& opt) {
  const ModelParams p = validate_params(params);
  if (q.j != 0 && q.j != 1) throw DomainError("plancherel_norm: j must be 0 or 1");
  if (!(q.s >= 0.0) || !std::isfinite(q.s)) throw DomainError("plancherel_norm: s must be >= 0");
  if (!(q.t > 0.0) || !std::isfinite(q.t)) throw DomainError("plancherel_norm: t must be > 0");
  if (!q.data0.g_hat || !q.data1.g_hat) throw DomainError("plancherel_norm: missing data");

  const bool need_solution = q.target != NormTarget::Profile;
  const bool need_profile = q.target != NormTarget::Solution;
  if (need_profile) {
    if (derivative_order(q.kind) != q.j)
      throw DomainError("plancherel_norm: profile " + to_string(q.kind) + " does not match j=" + std::to_string(q.j));
    if (q.kind != profile_for(p.damping_case(), q.j))
      throw DomainError("plancherel_norm: profile " + to_string(q.kind) + " does not belong to this damping case");
  }

  const double t = q.t;
  const double mass = q.data1.mass;
  const DataSpec& g0 = q.data0;
  const DataSpec& g1 = q.data1;

  auto symbol = [&](double r) {
    double m = 0.0;
    if (need_solution) {
      const KernelSet k = kernel_eval(p, t, r);
      const double v0 = g0(r);
      const double v1 = g1(r);
      m = q.j == 0 ? (k.k0 * v0 + k.k1 * v1).real() : (k.dt_k0 * v0 + k.dt_k1 * v1).real();
    }
    if (need_profile && mass != 0.0) m -= mass * profile_hat(q.kind, p, t, r);
    return m;
  };

  RadialIntegrand in;
  in.f = [&](double r) {
    const double m = symbol(r);
    return std::pow(r, 2.0 * q.s) * m * m;
  };
  in.envelope = [&](double r) {
    double e = 0.0;
    if (need_solution) {
      const RootPair roots = char_roots(p, r);
      const double growth = std::exp(roots.lambda1.real() * t) + std::exp(roots.lambda2.real() * t);
      const double rs = std::pow(r, p.sigma);
      double factor = 1.0 + rs * t + t;
      if (q.j == 1) factor *= 1.0 + p.damping(r) + rs;
      e += growth * factor * (std::abs(g0(r)) + std::abs(g1(r)));
    }
    if (need_profile && mass != 0.0) e += std::abs(mass * profile_hat(q.kind, p, t, r));
    return std::pow(r, 2.0 * q.s) * e * e;
  };
  in.breakpoints = discriminant_radii(p);
  if (p.damping_case() == DampingCase::A0B1) {
    in.oscillation_hint = [&](double r) { return t * p.sigma * std::pow(r, p.sigma - 1.0); };
  }

  NormResult sq = integrate_radial(in, p.n, opt);
  NormResult out = sq;
  out.value = std::sqrt(std::max(0.0, sq.value));
  out.abs_error_estimate = out.value > 0.0 ? sq.abs_error_estimate / (2.0 * out.value) : std::sqrt(sq.abs_error_estimate);
  return out;
}

namespace {

struct PowerLawIntegral {
  double gamma;
  double beta;
};

PowerLawIntegral diffusion_exponents(const ModelParams& p, double s, int j) {
  if (p.a != 1) throw DomainError("diffusion profile norms require a = 1");
  if (j != 0 && j != 1) throw DomainError("j must be 0 or 1");
  const double gamma = 2.0 * s - 4.0 * p.delta1 + 4.0 * j * (p.sigma - p.delta1) + p.n;
  if (!(gamma > 0.0)) throw DomainError("profile norm diverges: 2s - 4delta1 + 4j(sigma-delta1) + n must be > 0");
  return {gamma, 2.0 * (p.sigma - p.delta1)};
}

}  // namespace

double profile_norm_exponent(const ModelParams& p, double s, int j) {
  const auto [gamma, beta] = diffusion_exponents(p, s, j);
  return -gamma / (2.0 * beta);
}

double profile_norm_closed_form(const ModelParams& p, ProfileKind kind, double s, int j, double t) {
  if (kind != ProfileKind::DiffusionJ0 && kind != ProfileKind::DiffusionJ1)
    throw DomainError("profile_norm_closed_form handles diffusion profiles only");
  if (derivative_order(kind) != j) throw DomainError("profile kind does not match j");
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  const auto [gamma, beta] = diffusion_exponents(p, s, j);
  // ∫ r^{γ-1} e^{-2t r^β} dr = Γ(γ/β) / (β (2t)^{γ/β})
  const double k = gamma / beta;
  const double c2 = std::tgamma(k) / (beta * std::pow(2.0, k));
  return std::sqrt(c2) * std::pow(t, -0.5 * k);
}

double oscillatory_envelope_norm(const ModelParams& p, ProfileKind kind, double s, double t) {
  if (!(p.a == 0 && p.b == 1)) throw DomainError("oscillating profiles require (a,b) = (0,1)");
  if (kind != ProfileKind::OscSin && kind != ProfileKind::OscCos)
    throw DomainError("oscillatory_envelope_norm handles OscSin/OscCos only");
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  const double gamma = 2.0 * s + p.n - (kind == ProfileKind::OscSin ? 2.0 * p.sigma : 0.0);
  if (!(gamma > 0.0)) throw DomainError("oscillating envelope norm diverges");
  const double beta = 2.0 * p.delta2;
  const double k = gamma / beta;
  return std::sqrt(std::tgamma(k) / (beta * std::pow(t, k)));
}

}  // namespace sevo
