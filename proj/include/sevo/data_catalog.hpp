#pragma once

#include <functional>
#include <string>
#include <vector>

namespace sevo {

/// A radial Fourier-side datum ĝ(r) with its mass P = ĝ(0).
///
/// Every catalog entry is a Schwartz function, so `schwartz` is always true
/// for catalog data; it is carried so that callers can refuse anything else.
struct DataSpec {
  std::string name;
  std::function<double(double)> g_hat;
  double mass = 0.0;
  bool schwartz = true;

  [[nodiscard]] double operator()(double r) const { return g_hat(r); }
  [[nodiscard]] bool is_zero() const { return name == "zero"; }
};

/// gaussian, zero_mass, zero, dilated_gaussian(alpha) with alpha > 0.
/// Throws UnknownDatum for anything else.
DataSpec catalog_lookup(const std::string& name);

DataSpec dilated_gaussian(double alpha);

/// Names accepted by catalog_lookup (dilated_gaussian shown with a placeholder).
std::vector<std::string> catalog_names();

}  // namespace sevo
