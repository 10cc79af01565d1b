#include "gokit/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "gokit/error.hpp"

namespace gokit {

namespace {

std::vector<std::string> default_labels(int dim, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(dim);
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != dim) {
    throw InvalidInput("basis label count " + std::to_string(labels.size()) +
                       " does not match dim " + std::to_string(dim));
  }
  return labels;
}

}  // namespace

StructureTensor::StructureTensor(DenseTag, int dim, std::vector<double> c,
                                 std::vector<std::string> labels)
    : dim_(dim), c_(std::move(c)), labels_(default_labels(dim, std::move(labels))) {}

StructureTensor::StructureTensor(int dim, const std::vector<BracketEntry>& entries,
                                 std::vector<std::string> labels)
    : dim_(dim) {
  if (dim <= 0) throw InvalidInput("algebra dimension must be positive");
  labels_ = default_labels(dim, std::move(labels));
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  std::vector<bool> seen(c_.size(), false);

  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim) {
      std::ostringstream os;
      os << "bracket entry [" << e.i << ", " << e.j << ", " << e.k
         << "] has an index outside [0, " << dim << ")";
      throw InvalidInput(os.str());
    }
    if (!std::isfinite(e.value)) throw InvalidInput("bracket entry is not finite");
    if (e.i == e.j) {
      if (e.value != 0.0) {
        throw InvalidInput("diagonal bracket entry [" + std::to_string(e.i) + ", " +
                           std::to_string(e.i) + "] must be zero");
      }
      continue;
    }
    const int lo = std::min(e.i, e.j);
    const int hi = std::max(e.i, e.j);
    const double v = e.i < e.j ? e.value : -e.value;
    const auto idx = (static_cast<std::size_t>(lo) * dim + hi) * dim + e.k;
    if (seen[idx] && c_[idx] != v) {
      std::ostringstream os;
      os << "conflicting bracket entries for [" << lo << ", " << hi << "] component "
         << e.k;
      throw InvalidInput(os.str());
    }
    seen[idx] = true;
    at(lo, hi, e.k) = v;
    at(hi, lo, e.k) = -v;
  }
}

StructureTensor StructureTensor::abelian(int dim) {
  return StructureTensor(dim, std::vector<BracketEntry>{});
}

std::vector<BracketEntry> StructureTensor::entries() const {
  std::vector<BracketEntry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0.0) out.push_back({i, j, k, c(i, j, k)});
  return out;
}

void StructureTensor::check_vector(const AlgebraVector& x, const char* what) const {
  if (x.size() != dim_) {
    throw InvalidInput(std::string(what) + " has length " + std::to_string(x.size()) +
                       ", expected " + std::to_string(dim_));
  }
}

AlgebraVector StructureTensor::basis_vector(int i) const {
  if (i < 0 || i >= dim_) throw InvalidInput("basis index out of range");
  return AlgebraVector::Unit(dim_, i);
}

AlgebraVector StructureTensor::bracket(const AlgebraVector& x,
                                       const AlgebraVector& y) const {
  check_vector(x, "bracket lhs");
  check_vector(y, "bracket rhs");
  AlgebraVector out = AlgebraVector::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      for (int k = 0; k < dim_; ++k) out(k) += w * c(i, j, k);
    }
  }
  return out;
}

Matrix StructureTensor::ad_matrix(const AlgebraVector& x) const {
  check_vector(x, "ad argument");
  Matrix ad = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) ad(k, j) += x(i) * c(i, j, k);
  }
  return ad;
}

Matrix StructureTensor::coad_matrix(const AlgebraVector& x) const {
  return -ad_matrix(x).transpose();
}

double StructureTensor::jacobi_residual() const {
  const int n = dim_;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double sum = 0.0;
          for (int m = 0; m < n; ++m) {
            sum += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) +
                   c(k, i, m) * c(m, j, l);
          }
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

std::vector<SubspaceBasis> StructureTensor::derived_series() const {
  std::vector<SubspaceBasis> series;
  series.push_back({Matrix::Identity(dim_, dim_)});
  while (true) {
    const Matrix& prev = series.back().vectors;
    const auto r = prev.cols();
    if (r == 0) break;
    Matrix spans(dim_, r * (r - 1) / 2);
    Eigen::Index col = 0;
    for (Eigen::Index a = 0; a < r; ++a)
      for (Eigen::Index b = a + 1; b < r; ++b)
        spans.col(col++) = bracket(prev.col(a), prev.col(b));
    SubspaceBasis next = column_space(spans);
    const bool stable = next.rank() == r;
    const bool zero = next.rank() == 0;
    if (zero) next.vectors.resize(dim_, 0);
    series.push_back(std::move(next));
    if (stable || zero) break;
  }
  return series;
}

bool StructureTensor::is_solvable() const {
  return derived_series().back().rank() == 0;
}

double StructureTensor::infinitesimal_invariance_residual(
    const Matrix& q, const SubspaceBasis& k_basis) const {
  if (q.rows() != dim_ || q.cols() != dim_) {
    throw InvalidInput("invariance form must be dim x dim");
  }
  if (k_basis.rank() > 0 && k_basis.ambient_dim() != dim_) {
    throw InvalidInput("isotropy basis has the wrong ambient dimension");
  }
  double worst = 0.0;
  for (Eigen::Index col = 0; col < k_basis.rank(); ++col) {
    const Matrix ad = ad_matrix(k_basis.vectors.col(col));
    const Matrix sym = ad.transpose() * q + q * ad;
    if (sym.cwiseAbs().maxCoeff() == 0.0) continue;
    Eigen::JacobiSVD<Matrix> svd(sym);
    worst = std::max(worst, svd.singularValues()(0));
  }
  return worst;
}

StructureTensor StructureTensor::in_basis(const Matrix& basis,
                                          std::vector<std::string> labels) const {
  if (basis.rows() != dim_ || basis.cols() != dim_) {
    throw InvalidInput("change of basis must be dim x dim");
  }
  Eigen::FullPivLU<Matrix> lu(basis);
  if (!lu.isInvertible()) throw InvalidInput("change of basis is singular");
  std::vector<double> c(static_cast<std::size_t>(dim_) * dim_ * dim_, 0.0);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Vector coords = lu.solve(bracket(basis.col(i), basis.col(j)));
      for (int k = 0; k < dim_; ++k)
        c[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = coords(k);
    }
  // Restore exact antisymmetry lost to rounding.
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) c[(static_cast<std::size_t>(i) * dim_ + i) * dim_ + k] = 0.0;
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        auto& up = c[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
        auto& lo = c[(static_cast<std::size_t>(j) * dim_ + i) * dim_ + k];
        const double v = 0.5 * (up - lo);
        up = v;
        lo = -v;
      }
  }
  return StructureTensor(DenseTag{}, dim_, std::move(c),
                         labels.empty() ? std::vector<std::string>{} : std::move(labels));
}

}  // namespace gokit
