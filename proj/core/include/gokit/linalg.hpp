#pragma once

#include <optional>

#include <Eigen/Core>

namespace gokit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Element of a Lie algebra, in the algebra's basis.
using AlgebraVector = Eigen::VectorXd;
/// Element of the dual of a Lie algebra, in the dual basis.
using DualVector = Eigen::VectorXd;

/// Orthonormal basis of a subspace, stored as matrix columns.
struct SubspaceBasis {
  Matrix vectors;

  Eigen::Index ambient_dim() const { return vectors.rows(); }
  Eigen::Index rank() const { return vectors.cols(); }
};

/// Singular-value cutoff max(rows, cols) * eps * sigma_max.
double default_rank_cutoff(const Eigen::Ref<const Matrix>& a);

Eigen::Index numerical_rank(const Eigen::Ref<const Matrix>& a,
                            std::optional<double> cutoff = std::nullopt);

/// Orthonormal basis for the column space of `a`.
SubspaceBasis column_space(const Eigen::Ref<const Matrix>& a,
                           std::optional<double> cutoff = std::nullopt);

/// Orthonormal basis for the kernel of `a`.
SubspaceBasis null_space(const Eigen::Ref<const Matrix>& a,
                         std::optional<double> cutoff = std::nullopt);

/// Minimum-norm least-squares solution of a x = b together with the kernel
/// of a and the residual norm |a x - b|.
struct LeastSquaresSolution {
  Vector x;
  SubspaceBasis kernel;
  Eigen::Index rank = 0;
  double residual = 0.0;
};

LeastSquaresSolution min_norm_solve(const Eigen::Ref<const Matrix>& a,
                                    const Eigen::Ref<const Vector>& b,
                                    std::optional<double> cutoff = std::nullopt);

/// Largest principal angle (radians) between two subspaces of equal rank.
/// Returns pi/2 when the ranks differ.
double subspace_angle(const SubspaceBasis& u, const SubspaceBasis& v);

}  // namespace gokit
