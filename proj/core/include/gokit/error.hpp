#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace gokit {

enum class ErrorKind {
  InvalidInput,
  DegenerateLagrangian,
  NoEquilibrium,
  NoConvergence,
  InternalConsistency,
  Divergence,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::InvalidInput, what) {}
};

/// Iterative search stopped without meeting its tolerance; carries the best
/// iterate so callers can still inspect it.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, Eigen::VectorXd best, double residual)
      : Error(ErrorKind::NoConvergence, what),
        best_(std::move(best)),
        residual_(residual) {}

  const Eigen::VectorXd& best() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }

 private:
  Eigen::VectorXd best_;
  double residual_;
};

}  // namespace gokit
