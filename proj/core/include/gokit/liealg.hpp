#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gokit/linalg.hpp"

namespace gokit {

/// Sparse bracket entry [e_i, e_j] = ... + value * e_k.
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;
};

/// Structure constants c^k_{ij} of a finite-dimensional real Lie algebra,
/// [e_i, e_j] = sum_k c^k_{ij} e_k, stored densely.
///
/// Antisymmetry holds exactly by construction. The Jacobi identity is not
/// enforced on construction; call jacobi_residual() to check it.
class StructureTensor {
 public:
  /// Builds from sparse entries. Entries with i > j are mirrored; the
  /// antisymmetric partner of every entry is filled in automatically.
  /// Conflicting duplicates and diagonal entries raise InvalidInput.
  StructureTensor(int dim, const std::vector<BracketEntry>& entries,
                  std::vector<std::string> labels = {});

  static StructureTensor abelian(int dim);

  int dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// c^k_{ij}.
  double c(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// Nonzero entries with i < j, ordered by (i, j, k).
  std::vector<BracketEntry> entries() const;

  AlgebraVector basis_vector(int i) const;

  AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) const;

  /// Matrix of ad_x; column j is [x, e_j].
  Matrix ad_matrix(const AlgebraVector& x) const;

  /// Matrix of ad*_x = -(ad_x)^T acting on the dual basis.
  Matrix coad_matrix(const AlgebraVector& x) const;

  /// Max |cyclic Jacobi sum| over all index quadruples.
  double jacobi_residual() const;

  /// g^(0) = g, g^(i) = [g^(i-1), g^(i-1)]. Stops after the first term
  /// whose rank equals its predecessor's or is zero.
  std::vector<SubspaceBasis> derived_series() const;

  bool is_solvable() const;

  /// Spectral norm of ad_k^T Q + Q ad_k, maximised over the columns k of
  /// `k_basis`: the largest |Q(ad_k x, y) + Q(x, ad_k y)| over unit x, y.
  double infinitesimal_invariance_residual(const Matrix& q,
                                           const SubspaceBasis& k_basis) const;

  /// Same algebra expressed in a new basis whose vectors are the columns
  /// of `basis` (which must be invertible).
  StructureTensor in_basis(const Matrix& basis,
                           std::vector<std::string> labels = {}) const;

 private:
  struct DenseTag {};
  StructureTensor(DenseTag, int dim, std::vector<double> c,
                  std::vector<std::string> labels);

  double& at(int i, int j, int k) {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  void check_vector(const AlgebraVector& x, const char* what) const;

  int dim_;
  std::vector<double> c_;
  std::vector<std::string> labels_;
};

/// Default tolerance applied to user-supplied tensors by validation.
inline constexpr double kJacobiTolerance = 1e-10;

}  // namespace gokit
