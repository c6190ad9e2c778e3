#pragma once

#include <stdexcept>
#include <string>

namespace cusplab {

/// Invalid input: a precondition of an operation does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The input encodes fewer digits (or samples) than the request needs.
class InsufficientData : public DomainError {
 public:
  using DomainError::DomainError;
};

/// δ = 1: the spectrum interval [2δ − 1, δ] is a single point.
class DegenerateCase : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure failed to converge.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::string diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

}  // namespace cusplab
