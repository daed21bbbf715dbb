#include <doctest.h>

#include <cmath>
#include <limits>

#include "sevo/errors.hpp"
#include "sevo/radial_quadrature.hpp"

using namespace sevo;

TEST_CASE("elementary radial integrals") {
  CHECK(integrate_radial([](double r) { return std::exp(-r); }, 1).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_radial([](double r) { return std::exp(-r * r); }, 3).value ==
        doctest::Approx(std::sqrt(M_PI) / 4).epsilon(1e-12));

  // 1/2 - 1/2 * 1/(1 + 4*100^2)
  const auto res = integrate_radial([](double r) { return std::pow(std::sin(100 * r), 2) * std::exp(-r); }, 1, {},
                                    [](double) { return 100.0; });
  CHECK(res.converged);
  CHECK(res.value == doctest::Approx(0.5 - 0.5 / 40001.0).epsilon(1e-10));
}

TEST_CASE("error estimate is honest on a kinked integrand") {
  RadialIntegrand f;
  f.f = [](double r) { return std::abs(r - 1.0) * std::exp(-r); };
  f.breakpoints = {1.0};
  const auto res = integrate_radial(f, 1);
  const double exact = 2.0 / M_E;
  CHECK(std::abs(res.value - exact) <= std::max(res.abs_error_estimate, 1e-15));
}

TEST_CASE("non-finite samples are reported") {
  CHECK_THROWS_AS(integrate_radial([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 1),
                  NonFiniteIntegrand);
}

TEST_CASE("a tiny node budget reports non-convergence") {
  QuadratureOptions opt;
  opt.max_nodes = 60;
  const auto res = integrate_radial([](double r) { return std::pow(std::sin(300 * r), 2) * std::exp(-r); }, 1, opt);
  CHECK_FALSE(res.converged);
}

TEST_CASE("profile norm closed form matches high-precision reference") {
  ModelParams p;
  p.sigma = 2.0;
  p.delta1 = 0.5;
  p.n = 3;
  p = validate_params(p);
  CHECK(profile_norm_closed_form(p, ProfileKind::DiffusionJ0, 0.0, 0, 1.0) ==
        doctest::Approx(0.841877846261283665818815657979).epsilon(1e-14));
  CHECK(profile_norm_exponent(p, 0.0, 0) == doctest::Approx(-1.0 / 6.0));
  CHECK(profile_norm_closed_form(p, ProfileKind::DiffusionJ0, 0.0, 0, 64.0) ==
        doctest::Approx(0.841877846261283665818815657979 * std::pow(64.0, -1.0 / 6.0)).epsilon(1e-14));
}

TEST_CASE("plancherel norm of the profile agrees with the closed form") {
  ModelParams p;
  p.sigma = 2.0;
  p.delta1 = 0.5;
  p = validate_params(p);
  for (int j : {0, 1}) {
    NormQuery q;
    q.target = NormTarget::Profile;
    q.kind = profile_for(p.damping_case(), j);
    q.j = j;
    q.s = 1.0;
    q.t = 100.0;
    q.data0 = catalog_lookup("gaussian");
    q.data1 = catalog_lookup("gaussian");
    const auto res = plancherel_norm(p, q);
    CHECK(res.converged);
    CHECK(res.value == doctest::Approx(profile_norm_closed_form(p, q.kind, q.s, j, q.t)).epsilon(1e-8));
  }
}

TEST_CASE("plancherel norm edge cases") {
  ModelParams p = validate_params(ModelParams{});
  NormQuery q;
  q.data0 = catalog_lookup("zero");
  q.data1 = catalog_lookup("zero");
  CHECK(plancherel_norm(p, q).value == 0.0);

  q.data0 = catalog_lookup("gaussian");
  q.data1 = catalog_lookup("gaussian");
  q.target = NormTarget::Profile;
  q.kind = ProfileKind::DiffusionJ1;  // derivative order 1 with j = 0
  CHECK_THROWS_AS(plancherel_norm(p, q), DomainError);
  q.kind = ProfileKind::OscSin;  // wrong damping case
  CHECK_THROWS_AS(plancherel_norm(p, q), DomainError);
}

TEST_CASE("solution norms decrease in time") {
  for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    ModelParams p;
    p.a = a;
    p.b = b;
    p.delta1 = 0.3;
    p.delta2 = 0.8;
    p = validate_params(p);
    NormQuery q;
    q.data0 = catalog_lookup("gaussian");
    q.data1 = catalog_lookup("gaussian");
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {1.0, 4.0, 16.0, 64.0, 256.0}) {
      q.t = t;
      const auto res = plancherel_norm(p, q);
      CHECK(std::isfinite(res.value));
      CHECK(res.value < prev);
      prev = res.value;
    }
  }
}
