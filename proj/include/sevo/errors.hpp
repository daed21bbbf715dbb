#pragma once

#include <stdexcept>
#include <string>

namespace sevo {

/// Invalid model parameters or an argument outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonFiniteIntegrand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownDatum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateFit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StepTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZoneEmpty : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sevo
