#pragma once

#include <span>
#include <vector>

#include "gokit/linalg.hpp"

namespace gokit {

struct Monomial {
  std::vector<int> exponents;
  double coeff = 0.0;
};

/// Sparse real polynomial in a fixed number of variables with analytic
/// gradient. Like terms are merged and zero coefficients dropped on
/// construction, so two equal polynomials compare equal term by term.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int num_vars, std::vector<Monomial> terms);

  static Polynomial constant(int num_vars, double value);
  static Polynomial variable(int num_vars, int index);

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  int degree() const;

  double value(const Vector& x) const;
  Vector gradient(const Vector& x) const;

  /// Substitutes zero for every variable not in `keep` and renumbers the
  /// remaining ones in the order given.
  Polynomial restrict_to(std::span<const int> keep) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double s) const;

 private:
  void check(const Vector& x) const;

  int num_vars_ = 0;
  std::vector<Monomial> terms_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

}  // namespace gokit
