#include <doctest.h>

#include <cmath>

#include "sevo/data_catalog.hpp"
#include "sevo/errors.hpp"

using namespace sevo;

TEST_CASE("catalog entries") {
  const DataSpec g = catalog_lookup("gaussian");
  CHECK(g.mass == 1.0);
  CHECK(g(0.0) == 1.0);
  CHECK(g(2.0) == doctest::Approx(std::exp(-4.0)));

  const DataSpec z = catalog_lookup("zero_mass");
  CHECK(z.mass == 0.0);
  CHECK(z(0.0) == 0.0);
  CHECK(z(1.0) > 0.0);

  const DataSpec zero = catalog_lookup("zero");
  CHECK(zero.is_zero());
  CHECK(zero(0.3) == 0.0);
  CHECK_FALSE(g.is_zero());

  for (const auto& name : {"gaussian", "zero_mass", "zero", "dilated_gaussian(3)"})
    CHECK(catalog_lookup(name).schwartz);
}

TEST_CASE("dilated gaussian") {
  const DataSpec d = catalog_lookup("dilated_gaussian(4)");
  CHECK(d.mass == 1.0);
  CHECK(d(0.5) == doctest::Approx(std::exp(-1.0)));
  CHECK(catalog_lookup("dilated_gaussian( 0.25 )")(2.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(d.name == dilated_gaussian(4.0).name);
}

TEST_CASE("unknown data is rejected") {
  CHECK_THROWS_AS(catalog_lookup("lorentzian"), UnknownDatum);
  CHECK_THROWS_AS(catalog_lookup("dilated_gaussian(-1)"), UnknownDatum);
  CHECK_THROWS_AS(catalog_lookup("dilated_gaussian(2x)"), UnknownDatum);
  CHECK_THROWS_AS(catalog_lookup("Gaussian"), UnknownDatum);
  CHECK(catalog_names().size() == 4);
}
