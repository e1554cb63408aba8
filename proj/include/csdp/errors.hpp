#pragma once

#include <stdexcept>
#include <string>

namespace csdp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be symmetric is not.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/**
 * A function's default contract was violated, e.g. a non positive-definite
 * argument passed to the matrix square root. Carries the offending minimum
 * eigenvalue.
 */
class ContractViolation : public Error {
 public:
  ContractViolation(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// lsqr returned a point whose residual breaks the A*x == b contract.
class LsqrContractViolation : public Error {
 public:
  LsqrContractViolation(const std::string& what, double residual, double tol)
      : Error(what), residual_(residual), tolerance_(tol) {}

  double residual() const { return residual_; }
  double tolerance() const { return tolerance_; }

 private:
  double residual_;
  double tolerance_;
};

/// Malformed problem file or trace.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Trace schema version or layout is not the one this build understands.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Trace header names a different problem than the one supplied.
class HashMismatch : public Error {
 public:
  using Error::Error;
};

/// The starting point cannot be used by the short-step method.
class InitializationError : public Error {
 public:
  using Error::Error;
};

}  // namespace csdp
