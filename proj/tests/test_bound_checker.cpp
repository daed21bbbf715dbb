#include <doctest.h>

#include <cmath>

#include "sevo/bound_checker.hpp"
#include "sevo/errors.hpp"

using namespace sevo;

TEST_CASE("RK4 oracle reproduces the closed-form kernels") {
  for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    ModelParams p;
    p.a = a;
    p.b = b;
    p.delta1 = 0.3;
    p.delta2 = 0.8;
    p = validate_params(p);
    for (double r : {1e-3, 0.25, 1.0, 4.0}) {
      const OdeKernels o = ode_oracle(p, r, 2.0, ode_max_step(p, r));
      const KernelSet k = kernel_eval(p, 2.0, r);
      CHECK(std::abs(o.k0 - k.k0.real()) < 1e-9);
      CHECK(std::abs(o.k1 - k.k1.real()) < 1e-9);
      CHECK(std::abs(o.dt_k0 - k.dt_k0.real()) < 1e-9);
      CHECK(std::abs(o.dt_k1 - k.dt_k1.real()) < 1e-9);
    }
  }
}

TEST_CASE("oracle refuses unsafe steps and horizons") {
  const ModelParams p = validate_params(ModelParams{});
  CHECK_THROWS_AS(ode_oracle(p, 1.0, 1.0, 10 * ode_max_step(p, 1.0)), StepTooLarge);
  CHECK_THROWS_AS(ode_oracle(p, 1.0, 11.0, ode_max_step(p, 1.0)), DomainError);
  const auto traj = ode_oracle_trajectory(p, 0.5, {0.5, 1.0, 2.0}, ode_max_step(p, 0.5));
  REQUIRE(traj.size() == 3);
  CHECK(traj[2].t == 2.0);
}

TEST_CASE("frequency zones straddle the discriminant radii") {
  ModelParams p;
  const Zones z = frequency_zones(validate_params(p));
  CHECK(z.r_low == doctest::Approx(0.125));
  CHECK(z.r_high == doctest::Approx(0.5));
}

TEST_CASE("kernel bounds of the parabolic case hold and a wrong exponent is caught") {
  const ModelParams p = default_bound_params("2.1");
  const auto reps = check_kernel_bounds(p, "2.1", 0.0, 0);
  CHECK(reps.size() == 6);
  for (const auto& r : reps) {
    INFO(r.line);
    CHECK(r.pass);
    CHECK(std::isfinite(r.fitted_C));
    CHECK(r.max_ratio <= 1.0);
  }
  BoundGrid wrong;
  wrong.exponent_shift = 1.0;
  for (const auto& r : check_kernel_bounds(p, "2.1", 0.0, 0, wrong)) {
    if (r.line.rfind("low:", 0) == 0) {
      INFO(r.line);
      CHECK_FALSE(r.pass);
    }
  }
  CHECK_THROWS_AS(check_kernel_bounds(p, "2.2", 0.0, 0), DomainError);
}

TEST_CASE("expansion targets") {
  const auto targets = expansion_targets();
  CHECK(targets.size() == 10);
  const auto rep = check_expansion_bounds(default_bound_params("pro3.1.1"), "pro3.1.1", 0);
  CHECK(rep.pass);
  BoundGrid wrong;
  wrong.exponent_shift = 1.0;
  CHECK_FALSE(check_expansion_bounds(default_bound_params("pro3.1.1"), "pro3.1.1", 0, wrong).pass);
}

TEST_CASE("L1 lemma against the error function") {
  const auto rep = check_l1_lemma(2.0, 0.0, 1.0, 1, {0.25, 1.0, 4.0});
  CHECK(rep.inner[1] == doctest::Approx(std::sqrt(M_PI) * std::erf(1.0)).epsilon(1e-10));
  CHECK(rep.outer[1] == doctest::Approx(std::sqrt(M_PI) * std::erfc(1.0)).epsilon(1e-10));
  CHECK(rep.pass);
  CHECK(rep.sup_scaled <= 2.51);
}

TEST_CASE("convolution lemma") {
  ModelParams p;
  p.sigma = 2.0;
  p.delta1 = 0.5;
  p = validate_params(p);
  std::vector<double> ts;
  for (int k = 6; k <= 16; ++k) ts.push_back(std::ldexp(1.0, k));
  const auto g = check_convolution_lemma(catalog_lookup("gaussian"), ProfileKind::DiffusionJ0, p, 0.0, ts);
  CHECK(g.hypotheses_hold);
  CHECK(g.drop >= 10.0);
  CHECK(g.pass);
  const auto z = check_convolution_lemma(catalog_lookup("zero"), ProfileKind::DiffusionJ0, p, 0.0, ts);
  CHECK(z.identically_zero);
}

TEST_CASE("Riemann-Lebesgue decay for the exponential weight") {
  const auto rep = check_riemann_lebesgue(0.0, 1.0, {1.0, 10.0, 100.0});
  for (std::size_t i = 0; i < 3; ++i) {
    const double tau = rep.tau_values[i];
    CHECK(rep.cos_values[i] == doctest::Approx(1.0 / (1.0 + tau * tau)).epsilon(1e-8));
    CHECK(rep.sin_values[i] == doctest::Approx(tau / (1.0 + tau * tau)).epsilon(1e-8));
  }
}
