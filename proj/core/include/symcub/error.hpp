#pragma once

#include <stdexcept>
#include <string>

namespace symcub {

enum class ErrorCode {
  invalid_argument,
  domain_error,
  unsupported_degree,
  numeric_failure,
  ill_conditioned_input,
  oracle_imprecise,
};

/// Base class for every error thrown by the library. The code identifies the
/// failure category; the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::invalid_argument, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::domain_error, what) {}
};

class UnsupportedDegree : public Error {
 public:
  explicit UnsupportedDegree(const std::string& what)
      : Error(ErrorCode::unsupported_degree, what) {}
};

/// Iterative solver failure. `index` is the root (or item) that failed, -1 if
/// not applicable.
class NumericFailure : public Error {
 public:
  NumericFailure(const std::string& what, int index = -1)
      : Error(ErrorCode::numeric_failure, what), index_(index) {}

  int index() const noexcept { return index_; }

 private:
  int index_;
};

class IllConditionedInput : public Error {
 public:
  explicit IllConditionedInput(const std::string& what)
      : Error(ErrorCode::ill_conditioned_input, what) {}
};

class OracleImprecise : public Error {
 public:
  explicit OracleImprecise(const std::string& what)
      : Error(ErrorCode::oracle_imprecise, what) {}
};

}  // namespace symcub
