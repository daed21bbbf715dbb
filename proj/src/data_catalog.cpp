#include "sevo/data_catalog.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include "sevo/errors.hpp"

namespace sevo {

DataSpec dilated_gaussian(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw UnknownDatum("dilated_gaussian needs a finite alpha > 0");
  std::ostringstream name;
  name.precision(17);
  name << "dilated_gaussian(" << alpha << ")";
  return {name.str(), [alpha](double r) { return std::exp(-alpha * r * r); }, 1.0, true};
}

DataSpec catalog_lookup(const std::string& name) {
  if (name == "gaussian") return {name, [](double r) { return std::exp(-r * r); }, 1.0, true};
  if (name == "zero_mass") return {name, [](double r) { return r * r * std::exp(-r * r); }, 0.0, true};
  if (name == "zero") return {name, [](double) { return 0.0; }, 0.0, true};

  static const std::regex dilated(R"(dilated_gaussian\(\s*([^)\s]+)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, dilated)) {
    std::size_t used = 0;
    double alpha = 0.0;
    try {
      alpha = std::stod(m[1].str(), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == m[1].str().size()) return dilated_gaussian(alpha);
  }
  throw UnknownDatum("unknown datum '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"gaussian", "zero_mass", "dilated_gaussian(<alpha>)", "zero"};
}

}  // namespace sevo
