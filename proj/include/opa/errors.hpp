#pragma once

#include <stdexcept>
#include <string>

namespace opa {

// Every library failure derives from Error. The CLI maps exit_code() straight
// onto its process status: 2 for bad input, 3 for numerical trouble.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
  virtual int exit_code() const noexcept = 0;
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
  int exit_code() const noexcept override { return 2; }
};

// A parameter outside the region where a formula is defined (|alpha| <= 1 for
// the critical gain, r < 0 in a SqueezeParam, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
  int exit_code() const noexcept override { return 2; }
};

class DimensionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension"; }
  int exit_code() const noexcept override { return 2; }
};

class TruncationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "truncation"; }
  int exit_code() const noexcept override { return 3; }
};

class NumericalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "numerical"; }
  int exit_code() const noexcept override { return 3; }
};

class HeraldError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "herald"; }
  int exit_code() const noexcept override { return 3; }
};

}  // namespace opa
