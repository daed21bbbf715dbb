#include <doctest.h>

#include <cmath>

#include "sevo/errors.hpp"
#include "sevo/spectral.hpp"

using namespace sevo;

namespace {

ModelParams make(int a, int b, double sigma = 1.0, double d1 = 0.25, double d2 = 0.75) {
  ModelParams p;
  p.a = a;
  p.b = b;
  p.sigma = sigma;
  p.delta1 = d1;
  p.delta2 = d2;
  return validate_params(p);
}

double rel(cplx x, cplx y) { return std::abs(x - y) / std::max(1e-300, std::max(std::abs(x), std::abs(y))); }

}  // namespace

TEST_CASE("parameter validation names the broken constraint") {
  ModelParams p;
  p.sigma = 0.5;
  CHECK_THROWS_AS(validate_params(p), DomainError);
  p = {};
  p.delta1 = 0.6;  // above sigma/2
  CHECK_THROWS_AS(validate_params(p), DomainError);
  p = {};
  p.a = 0;
  p.b = 0;
  CHECK_THROWS_AS(validate_params(p), DomainError);
  p = {};
  p.a = 0;
  p.b = 1;
  CHECK(std::isnan(validate_params(p).delta1));
}

TEST_CASE("roots at a small radius match the quadratic formula in high precision") {
  const RootPair rp = char_roots(make(1, 0), 0.01);
  CHECK(rp.lambda1.real() == doctest::Approx(-0.00101020514433644).epsilon(1e-14));
  CHECK(rp.lambda2.real() == doctest::Approx(-0.0989897948556636).epsilon(1e-14));
  CHECK(rp.lambda1.imag() == 0.0);
  CHECK(rp.discriminant > 0.0);
}

TEST_CASE("Vieta relations across all damping cases") {
  for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    const ModelParams p = make(a, b, 1.0, 0.3, 0.8);
    for (double r = 1e-4; r < 1e3; r *= 1.7) {
      const RootPair rp = char_roots(p, r);
      CHECK(rel(rp.lambda1 + rp.lambda2, -p.damping(r)) < 1e-12);
      CHECK(rel(rp.lambda1 * rp.lambda2, p.stiffness(r)) < 1e-12);
    }
  }
}

TEST_CASE("discriminant radii") {
  auto r10 = discriminant_radii(make(1, 0));
  REQUIRE(r10.size() == 1);
  CHECK(r10[0] == doctest::Approx(0.25).epsilon(1e-11));

  auto r01 = discriminant_radii(make(0, 1));
  REQUIRE(r01.size() == 1);
  CHECK(r01[0] == doctest::Approx(4.0).epsilon(1e-11));

  auto r11 = discriminant_radii(make(1, 1, 1.0, 0.3, 0.8));
  REQUIRE(r11.size() == 2);
  CHECK(r11[0] == doctest::Approx(0.43948).epsilon(1e-5));
  CHECK(r11[1] == doctest::Approx(1.0).epsilon(1e-11));

  CHECK(char_roots(make(1, 0), 0.25).confluent);
}

TEST_CASE("phi1 and expm1 keep full precision near zero") {
  for (double x : {1e-14, 1e-9, 1e-5, 3e-4, 2e-3, 0.5}) {
    const cplx z{x, -0.7 * x};
    const cplx series = z * (1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0 + z * z * z * z / 120.0);
    CHECK(rel(expm1(z), x > 1e-2 ? std::exp(z) - 1.0 : series) < 1e-13);
    CHECK(rel(phi1(z) * z, expm1(z)) < 1e-14);
  }
  CHECK(phi1(cplx{0.0, 0.0}) == cplx{1.0, 0.0});
}

TEST_CASE("kernels start from the identity") {
  for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    const ModelParams p = make(a, b, 1.0, 0.3, 0.8);
    for (double r : {1e-3, 0.25, 1.0, 4.0, 30.0}) {
      const KernelSet k = kernel_eval(p, 0.0, r);
      CHECK(std::abs(k.k0 - 1.0) < 1e-14);
      CHECK(std::abs(k.k1) < 1e-14);
      CHECK(std::abs(k.dt_k0) < 1e-12 * std::max(1.0, p.stiffness(r)));
      CHECK(std::abs(k.dt_k1 - 1.0) < 1e-13);
    }
  }
}

TEST_CASE("kernels are continuous through a confluent radius") {
  const ModelParams p = make(1, 0);
  for (double t : {0.5, 2.0, 5.0}) {
    const KernelSet lo = kernel_eval(p, t, 0.25 - 1e-9);
    const KernelSet mid = kernel_eval(p, t, 0.25);
    const KernelSet hi = kernel_eval(p, t, 0.25 + 1e-9);
    for (const KernelSet* k : {&lo, &hi}) {
      CHECK(std::abs(k->k0 - mid.k0) < 1e-6);
      CHECK(std::abs(k->k1 - mid.k1) < 1e-6);
      CHECK(std::abs(k->dt_k0 - mid.dt_k0) < 1e-6);
      CHECK(std::abs(k->dt_k1 - mid.dt_k1) < 1e-6);
    }
  }
}

TEST_CASE("low-frequency expansion of the slow root") {
  const ModelParams p = make(1, 0, 2.0, 0.5);
  for (double r : {1e-3, 1e-2, 5e-2}) {
    const double exact = -char_roots(p, r).lambda1.real();
    const double approx = lambda1_low_freq_expansion(p, r);
    const double leading = std::pow(r, 2 * (p.sigma - p.delta1));
    CHECK(std::abs(exact - approx) < 0.01 * std::abs(exact - leading) + 1e-300);
  }
}

TEST_CASE("profile multipliers") {
  const ModelParams p = make(1, 0, 2.0, 0.5);
  CHECK(profile_hat(ProfileKind::DiffusionJ0, p, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(profile_hat(ProfileKind::DiffusionJ0, p, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(profile_hat(ProfileKind::OscSin, p, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(profile_hat(ProfileKind::DiffusionJ0, p, -1.0, 1.0), DomainError);

  const ModelParams q = make(0, 1);
  const double r = 0.3, t = 7.0;
  CHECK(profile_hat(ProfileKind::OscCos, q, t, r) ==
        doctest::Approx(std::exp(-t * std::pow(r, 1.5) / 2) * std::cos(t * r)));
  CHECK(parse_profile_kind("sin") == ProfileKind::OscSin);
  CHECK(profile_for(DampingCase::A0B1, 1) == ProfileKind::OscCos);
  CHECK_THROWS(parse_profile_kind("bogus"));
}

TEST_CASE("ExpSum log magnitude survives underflow") {
  const ExpSum e({{cplx{2.0, 0.0}, cplx{-1000.0, 0.0}}, {cplx{1.0, 0.0}, cplx{-1001.0, 0.0}}});
  CHECK(e.value(1000.0) == cplx{0.0, 0.0});
  CHECK(e.log_abs(1000.0) == doctest::Approx(std::log(2.0) - 1e6 + std::log1p(std::exp(-1000.0) / 2)));
  CHECK(std::isinf(ExpSum{}.log_abs(1.0)));
  const ExpSum d = e.derivative();
  CHECK(rel(d.value(0.01), -2000.0 * std::exp(-10.0) - 1001.0 * std::exp(-10.01)) < 1e-14);
}

TEST_CASE("kernel pieces sum to the kernels") {
  const ModelParams p = make(1, 0);
  for (double r : {0.05, 0.2, 0.7}) {
    const ExpSum k0 = kernel_piece(p, r, KernelPiece::K0_1) + kernel_piece(p, r, KernelPiece::K0_2);
    const ExpSum k1 = kernel_piece(p, r, KernelPiece::K1_1) + kernel_piece(p, r, KernelPiece::K1_2);
    for (double t : {0.3, 3.0}) {
      const KernelSet k = kernel_eval(p, t, r);
      CHECK(rel(k0.value(t), k.k0) < 1e-10);
      CHECK(rel(k1.value(t), k.k1) < 1e-10);
    }
  }
  const ModelParams q = make(0, 1);
  const ExpSum k0 = kernel_piece(q, 0.5, KernelPiece::K0_cos) + kernel_piece(q, 0.5, KernelPiece::K0_sin);
  CHECK(rel(k0.value(2.0), kernel_eval(q, 2.0, 0.5).k0) < 1e-12);
}
