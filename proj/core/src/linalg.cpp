#include "gokit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/SVD>

namespace gokit {

namespace {

double cutoff_for(const Eigen::JacobiSVD<Matrix>& svd, Eigen::Index rows,
                  Eigen::Index cols, std::optional<double> cutoff) {
  if (cutoff) return *cutoff;
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  return static_cast<double>(std::max(rows, cols)) *
         std::numeric_limits<double>::epsilon() * smax;
}

Eigen::Index rank_of(const Vector& singular, double cutoff) {
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    if (singular(i) > cutoff) ++r;
  }
  return r;
}

}  // namespace

double default_rank_cutoff(const Eigen::Ref<const Matrix>& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return cutoff_for(svd, a.rows(), a.cols(), std::nullopt);
}

Eigen::Index numerical_rank(const Eigen::Ref<const Matrix>& a,
                            std::optional<double> cutoff) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return rank_of(svd.singularValues(), cutoff_for(svd, a.rows(), a.cols(), cutoff));
}

SubspaceBasis column_space(const Eigen::Ref<const Matrix>& a,
                           std::optional<double> cutoff) {
  if (a.size() == 0) return {Matrix(a.rows(), 0)};
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU);
  const auto r =
      rank_of(svd.singularValues(), cutoff_for(svd, a.rows(), a.cols(), cutoff));
  return {svd.matrixU().leftCols(r)};
}

SubspaceBasis null_space(const Eigen::Ref<const Matrix>& a,
                         std::optional<double> cutoff) {
  if (a.rows() == 0) return {Matrix::Identity(a.cols(), a.cols())};
  if (a.cols() == 0) return {Matrix(0, 0)};
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto r =
      rank_of(svd.singularValues(), cutoff_for(svd, a.rows(), a.cols(), cutoff));
  return {svd.matrixV().rightCols(a.cols() - r)};
}

LeastSquaresSolution min_norm_solve(const Eigen::Ref<const Matrix>& a,
                                    const Eigen::Ref<const Vector>& b,
                                    std::optional<double> cutoff) {
  LeastSquaresSolution out;
  const auto n = a.cols();
  if (a.rows() == 0) {
    out.x = Vector::Zero(n);
    out.kernel = {Matrix::Identity(n, n)};
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  const double tau = cutoff_for(svd, a.rows(), a.cols(), cutoff);
  const auto r = rank_of(s, tau);

  const Vector ub = svd.matrixU().leftCols(r).transpose() * b;
  Vector coeff = ub.array() / s.head(r).array();
  out.x = svd.matrixV().leftCols(r) * coeff;
  out.kernel = {svd.matrixV().rightCols(n - r)};
  out.rank = r;
  out.residual = (a * out.x - b).norm();
  return out;
}

double subspace_angle(const SubspaceBasis& u, const SubspaceBasis& v) {
  if (u.rank() != v.rank() || u.ambient_dim() != v.ambient_dim()) {
    return std::numbers::pi / 2;
  }
  if (u.rank() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(u.vectors.transpose() * v.vectors);
  const double smallest = std::clamp(svd.singularValues().minCoeff(), -1.0, 1.0);
  // acos is ill-conditioned near 1; use the sine of the largest angle instead.
  const Matrix residual =
      v.vectors - u.vectors * (u.vectors.transpose() * v.vectors);
  Eigen::JacobiSVD<Matrix> rsvd(residual);
  const double sine = std::min(1.0, rsvd.singularValues()(0));
  return smallest > 0.7 ? std::asin(sine) : std::acos(smallest);
}

}  // namespace gokit
