#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace szk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The weight series hit its term cap before the mass criterion was met.
class TruncationFailure : public Error {
 public:
  TruncationFailure(const std::string& what, double captured_mass, std::size_t terms)
      : Error(what), captured_mass_(captured_mass), terms_(terms) {}

  double captured_mass() const noexcept { return captured_mass_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  double captured_mass_;
  std::size_t terms_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

class MissingDerivative : public Error {
 public:
  using Error::Error;
};

class MissingOneSided : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration (bad JSON, unknown key, inconsistent rule).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace szk
