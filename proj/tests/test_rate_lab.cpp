#include <doctest.h>

#include <cmath>

#include "sevo/errors.hpp"
#include "sevo/rate_lab.hpp"

using namespace sevo;

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(2, 4), b(-1, 3);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK((a + b).str() == "1/6");
  CHECK((a * b).str() == "-1/6");
  CHECK((a / b).str() == "-3/2");
  CHECK(Rational(6, -3).str() == "-2");
  CHECK(b < a);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(a / Rational(0), DomainError);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(INT64_MAX), DomainError);
}

TEST_CASE("rationalization of decimal parameters") {
  CHECK(Rational::from_double(0.75) == Rational(3, 4));
  CHECK(Rational::from_double(-1.0 / 3.0) == Rational(-1, 3));
  CHECK(Rational::from_double(0.3) == Rational(3, 10));
  CHECK_THROWS_AS(Rational::from_double(M_PI, 100), DomainError);
  CHECK_THROWS_AS(Rational::from_double(NAN), DomainError);
}

TEST_CASE("predicted exponents of the three theorems") {
  ModelParams p11;
  p11.sigma = 2.0;
  p11.delta1 = 0.5;
  CHECK(theoretical_exponent_exact(DampingCase::A1B0, p11, 1.0, 0.0, 0) == Rational(-1, 6));
  CHECK(theoretical_exponent_exact(DampingCase::A1B0, p11, 1.0, 1.0, 0) == Rational(-1, 2));
  CHECK(theoretical_exponent_exact(DampingCase::A1B0, p11, 1.0, 0.0, 1) == Rational(-7, 6));

  ModelParams p12;
  p12.a = 0;
  p12.b = 1;
  CHECK(theoretical_exponent_exact(DampingCase::A0B1, p12, 1.0, 0.0, 0) == Rational(-1, 3));
  CHECK(theoretical_exponent_exact(DampingCase::A0B1, p12, 1.0, 0.0, 1) == Rational(-1));

  ModelParams p13;
  p13.a = p13.b = 1;
  p13.delta1 = 0.3;
  p13.delta2 = 0.8;
  CHECK(theoretical_exponent_exact(DampingCase::A1B1, p13, 1.0, 0.0, 0) == Rational(-9, 14));
  CHECK(theoretical_exponent(DampingCase::A1B1, p13, 1.0, 0.0, 0) == doctest::Approx(-9.0 / 14.0));
}

TEST_CASE("predicted exponent agrees with the profile norm exponent at m = 1") {
  ModelParams p;
  p.sigma = 1.5;
  p.delta1 = 0.4;
  p.n = 4;
  p = validate_params(p);
  for (double s : {0.0, 0.5, 2.0})
    for (int j : {0, 1})
      CHECK(theoretical_exponent(DampingCase::A1B0, p, 1.0, s, j) ==
            doctest::Approx(profile_norm_exponent(p, s, j)).epsilon(1e-14));
}

TEST_CASE("exponent domain checks") {
  ModelParams p;
  CHECK_THROWS_AS(theoretical_exponent(DampingCase::A1B0, p, 2.0, 0.0, 0), DomainError);
  CHECK_THROWS_AS(theoretical_exponent(DampingCase::A1B0, p, 0.5, 0.0, 0), DomainError);
  CHECK_THROWS_AS(theoretical_exponent(DampingCase::A1B0, p, 1.0, 0.0, 2), DomainError);
  p.n = 1;
  p.delta1 = 0.45;
  CHECK_THROWS_AS(theoretical_exponent(DampingCase::A1B0, p, 1.5, 0.0, 0), DomainError);
}

TEST_CASE("rate fits") {
  const TimeGrid g = TimeGrid::geometric(2.0, 0, 9);
  CHECK(g.size() == 10);
  CHECK(g.t_values.back() == 512.0);
  std::vector<double> y;
  for (double t : g.t_values) y.push_back(3.0 * std::pow(t, -0.4) * (1.0 + 1.0 / t));
  const RateFit tail = fit_rate_tail(g, y, 4);
  CHECK(tail.window_begin == 6);
  CHECK(tail.window_end == 10);
  CHECK(tail.slope == doctest::Approx(-0.4).epsilon(0.01));
  const RateFit all = fit_rate(g, y, 1.0);
  CHECK(std::abs(all.slope + 0.4) > std::abs(tail.slope + 0.4));

  std::vector<double> pure;
  for (double t : g.t_values) pure.push_back(std::pow(t, -1.25));
  CHECK(fit_rate(g, pure, 0.5).slope == doctest::Approx(-1.25).epsilon(1e-12));
  CHECK(fit_rate(g, pure, 0.5).max_abs_residual < 1e-12);

  CHECK_THROWS_AS(fit_rate_tail(g, y, 2), DegenerateFit);
  y[9] = 0.0;
  CHECK_THROWS_AS(fit_rate_tail(g, y, 4), DegenerateFit);
}

TEST_CASE("little-o diagnostic") {
  const TimeGrid g = TimeGrid::geometric(2.0, 4, 13);
  std::vector<double> fast, same;
  for (double t : g.t_values) {
    fast.push_back(std::pow(t, -0.5 - 1.0 / 3.0));
    same.push_back(std::pow(t, -0.5));
  }
  const LittleOReport lo = little_o_diagnostic(g, fast, -0.5);
  CHECK(lo.ratio_last_first == doctest::Approx(std::pow(512.0, -1.0 / 3.0)));
  CHECK(lo.monotone_tail);
  const LittleOReport flat = little_o_diagnostic(g, same, -0.5);
  CHECK(flat.ratio_last_first == doctest::Approx(1.0));
  CHECK_FALSE(flat.monotone_tail);
}

TEST_CASE("suite preconditions") {
  SuiteConfig cfg = SuiteConfig::defaults_for("1.1");
  CHECK_NOTHROW(check_suite_preconditions(cfg));
  cfg.params.n = 2;  // boundary n = 4*delta1
  CHECK_THROWS_AS(check_suite_preconditions(cfg), DomainError);

  cfg = SuiteConfig::defaults_for("1.3");
  cfg.params.delta2 = 0.6;
  CHECK_THROWS_AS(check_suite_preconditions(cfg), DomainError);
  CHECK_THROWS_AS(SuiteConfig::defaults_for("1.4"), DomainError);
}

TEST_CASE("short suite run records every target") {
  SuiteConfig cfg = SuiteConfig::defaults_for("1.1");
  cfg.grid_k_min = 6;
  cfg.grid_k_max = 9;
  cfg.fit_points = 3;
  const SuiteReport rep = run_theorem_suite(cfg);
  REQUIRE(rep.queries.size() == 1);
  CHECK(rep.t_values.size() == 4);
  CHECK(rep.series.size() == 4 * 4);
  CHECK(rep.queries[0].error.empty());
  CHECK(rep.queries[0].theoretical_exact == "-1/6");
  CHECK(rep.queries[0].checks.size() == 5);
}
