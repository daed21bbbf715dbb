#include "sevo/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sevo/errors.hpp"

namespace sevo {

std::string to_string(DampingCase c) {
  switch (c) {
    case DampingCase::A1B0: return "A1B0";
    case DampingCase::A0B1: return "A0B1";
    case DampingCase::A1B1: return "A1B1";
  }
  return "?";
}

DampingCase ModelParams::damping_case() const {
  if (a == 1 && b == 1) return DampingCase::A1B1;
  if (a == 1) return DampingCase::A1B0;
  return DampingCase::A0B1;
}

double ModelParams::damping(double r) const {
  double d = 0.0;
  if (a == 1) d += std::pow(r, 2.0 * delta1);
  if (b == 1) d += std::pow(r, 2.0 * delta2);
  return d;
}

double ModelParams::stiffness(double r) const { return std::pow(r, 2.0 * sigma); }

namespace {

[[noreturn]] void reject(const std::string& what, const ModelParams& p) {
  std::ostringstream os;
  os << "invalid model parameters: " << what << " (sigma=" << p.sigma << ", delta1=" << p.delta1
     << ", delta2=" << p.delta2 << ", a=" << p.a << ", b=" << p.b << ", n=" << p.n << ")";
  throw DomainError(os.str());
}

}  // namespace

ModelParams validate_params(const ModelParams& p) {
  if ((p.a != 0 && p.a != 1) || (p.b != 0 && p.b != 1)) reject("a and b must be 0 or 1", p);
  if (p.a == 0 && p.b == 0) reject("(a,b) != (0,0)", p);
  if (!std::isfinite(p.sigma) || p.sigma < 1.0) reject("sigma >= 1", p);
  if (p.n < 1) reject("n >= 1", p);

  ModelParams out = p;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (p.a == 1) {
    if (!std::isfinite(p.delta1) || !(p.delta1 > 0.0)) reject("0 < delta1", p);
    if (!(p.delta1 < p.sigma / 2.0)) reject("delta1 < sigma/2", p);
  } else {
    out.delta1 = nan;
  }
  if (p.b == 1) {
    if (!std::isfinite(p.delta2) || !(p.delta2 > p.sigma / 2.0)) reject("sigma/2 < delta2", p);
    if (!(p.delta2 < p.sigma)) reject("delta2 < sigma", p);
  } else {
    out.delta2 = nan;
  }
  return out;
}

}  // namespace sevo
