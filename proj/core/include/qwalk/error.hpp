#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value failed a unitarity or normalization check. `defect()` is the
/// largest observed deviation from the required identity.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class EigenSolveError : public Error {
 public:
  EigenSolveError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Eigenpairs at neighbouring wavenumbers could not be matched uniquely,
/// usually because two eigenvalues collide.
class BranchTrackingError : public Error {
 public:
  BranchTrackingError(const std::string& what, double k) : Error(what), k_(k) {}
  double k() const noexcept { return k_; }

 private:
  double k_;
};

/// Closed-form density evaluated where it is not a real number.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwalk
