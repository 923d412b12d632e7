#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularTransform : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Conditioning on something with zero value (empty source node, zero evidence).
class EmptyConditioning : public DomainError {
 public:
  using DomainError::DomainError;
};

class ClassificationFailure : public Error {
 public:
  ClassificationFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotUnitary : public DomainError {
 public:
  NotUnitary(const std::string& what, double deviation)
      : DomainError(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class InvalidNetwork : public DomainError {
 public:
  using DomainError::DomainError;
};

class CycleDetected : public InvalidNetwork {
 public:
  using InvalidNetwork::InvalidNetwork;
};

}  // namespace qcalc
