#include "gokit/homspace.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gokit/error.hpp"
#include "gokit/rng.hpp"

namespace gokit {

HomogeneousModel::HomogeneousModel(StructureTensor algebra, std::vector<int> k_indices,
                                   std::vector<int> m_indices, double closure_tol)
    : algebra_(std::move(algebra)), k_(std::move(k_indices)), m_(std::move(m_indices)) {
  const int n = algebra_.dim();
  std::vector<int> owner(n, 0);
  for (int i : k_) {
    if (i < 0 || i >= n) throw InvalidInput("k index " + std::to_string(i) + " out of range");
    ++owner[i];
  }
  for (int i : m_) {
    if (i < 0 || i >= n) throw InvalidInput("m index " + std::to_string(i) + " out of range");
    ++owner[i];
  }
  for (int i = 0; i < n; ++i) {
    if (owner[i] != 1) {
      throw InvalidInput("k and m must partition the basis; index " + std::to_string(i) +
                         " appears " + std::to_string(owner[i]) + " times");
    }
  }
  if (m_.empty()) throw InvalidInput("m must be non-empty");

  std::vector<bool> in_k(n, false);
  for (int i : k_) in_k[i] = true;
  for (int i : k_) {
    for (int j : k_)
      for (int l = 0; l < n; ++l)
        if (!in_k[l])
          k_closure_residual_ = std::max(k_closure_residual_, std::abs(algebra_.c(i, j, l)));
    for (int j : m_)
      for (int l = 0; l < n; ++l)
        if (in_k[l])
          reductive_residual_ = std::max(reductive_residual_, std::abs(algebra_.c(i, j, l)));
  }
  if (k_closure_residual_ > closure_tol) {
    throw InvalidInput("isotropy subalgebra is not closed under the bracket (residual " +
                       std::to_string(k_closure_residual_) + ")");
  }
}

TangentVector HomogeneousModel::f_apply(const AlgebraVector& a) const {
  if (a.size() != dim()) throw InvalidInput("f_apply: vector has the wrong length");
  TangentVector v(m_dim());
  for (int r = 0; r < m_dim(); ++r) v(r) = a(m_[r]);
  return v;
}

DualVector HomogeneousModel::f_star(const Covector& p) const {
  if (p.size() != m_dim()) throw InvalidInput("f_star: covector has the wrong length");
  DualVector out = DualVector::Zero(dim());
  for (int r = 0; r < m_dim(); ++r) out(m_[r]) = p(r);
  return out;
}

AlgebraVector HomogeneousModel::m_embed(const TangentVector& v) const {
  if (v.size() != m_dim()) throw InvalidInput("m_embed: vector has the wrong length");
  AlgebraVector out = AlgebraVector::Zero(dim());
  for (int r = 0; r < m_dim(); ++r) out(m_[r]) = v(r);
  return out;
}

SubspaceBasis HomogeneousModel::k_basis() const {
  Matrix b = Matrix::Zero(dim(), k_dim());
  for (int r = 0; r < k_dim(); ++r) b(k_[r], r) = 1.0;
  return {b};
}

SubspaceBasis HomogeneousModel::m_basis() const {
  Matrix b = Matrix::Zero(dim(), m_dim());
  for (int r = 0; r < m_dim(); ++r) b(m_[r], r) = 1.0;
  return {b};
}

Matrix HomogeneousModel::isotropy_action(const AlgebraVector& kappa) const {
  const Matrix coad = algebra_.coad_matrix(kappa);
  Matrix block(m_dim(), m_dim());
  for (int r = 0; r < m_dim(); ++r)
    for (int s = 0; s < m_dim(); ++s) block(r, s) = coad(m_[r], m_[s]);
  return block;
}

Polynomial HomogeneousModel::restrict(const Polynomial& h) const {
  if (h.num_vars() != dim()) throw InvalidInput("restrict: polynomial is not over g*");
  return h.restrict_to(m_);
}

EnergyForm EnergyForm::quadratic(Matrix s) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    throw InvalidInput("quadratic form matrix must be square and non-empty");
  }
  if (!s.allFinite()) throw InvalidInput("quadratic form matrix is not finite");
  if (s != s.transpose()) throw InvalidInput("quadratic form matrix must be exactly symmetric");
  const int d = static_cast<int>(s.rows());
  return EnergyForm(d, std::move(s));
}

EnergyForm EnergyForm::polynomial(Polynomial poly) {
  const int d = poly.num_vars();
  if (d == 0) throw InvalidInput("polynomial form needs at least one variable");
  return EnergyForm(d, std::move(poly));
}

const Matrix& EnergyForm::matrix() const {
  if (!is_quadratic()) throw InvalidInput("energy form is not quadratic");
  return std::get<Matrix>(data_);
}

const Polynomial& EnergyForm::poly() const {
  if (is_quadratic()) throw InvalidInput("energy form is not polynomial");
  return std::get<Polynomial>(data_);
}

Polynomial EnergyForm::as_polynomial() const {
  if (!is_quadratic()) return poly();
  const Matrix& s = matrix();
  std::vector<Monomial> terms;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      if (s(i, j) == 0.0) continue;
      std::vector<int> e(dim_, 0);
      ++e[i];
      ++e[j];
      terms.push_back({e, i == j ? 0.5 * s(i, i) : s(i, j)});
    }
  return Polynomial(dim_, std::move(terms));
}

double EnergyForm::value(const Vector& p) const {
  if (p.size() != dim_) throw InvalidInput("energy form evaluated at a point of wrong length");
  if (is_quadratic()) return 0.5 * p.dot(matrix() * p);
  return poly().value(p);
}

Vector EnergyForm::gradient(const Vector& p) const {
  if (p.size() != dim_) throw InvalidInput("energy form gradient at a point of wrong length");
  if (is_quadratic()) return matrix() * p;
  return poly().gradient(p);
}

double EnergyForm::scale_at(const Vector& p) const {
  if (is_quadratic()) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return gradient(p).norm() / std::max(1.0, p.norm());
}

bool EnergyForm::is_positive_definite() const {
  if (!is_quadratic()) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > 0.0;
}

double ad_star_invariance_residual(const StructureTensor& algebra,
                                   const InvariantPolynomial& h, int samples,
                                   std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("ad_star_invariance_residual needs samples >= 1");
  if (h.num_vars() != algebra.dim()) {
    throw InvalidInput("invariant polynomial is not over the algebra's dual");
  }
  CounterRng rng(seed, "ad_star_invariance");
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const DualVector mu = rng.normal_vector(algebra.dim());
    const AlgebraVector a = rng.normal_vector(algebra.dim());
    const double d = h.gradient(mu).dot(algebra.coad_matrix(a) * mu);
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

double isotropy_invariance_residual(const HomogeneousModel& model,
                                    const EnergyForm& form, int samples,
                                    std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("isotropy_invariance_residual needs samples >= 1");
  if (form.dim() != model.m_dim()) throw InvalidInput("energy form dimension mismatch");
  CounterRng rng(seed, "isotropy_invariance");
  const SubspaceBasis kb = model.k_basis();
  std::vector<Matrix> actions;
  for (Eigen::Index c = 0; c < kb.rank(); ++c) actions.push_back(model.isotropy_action(kb.vectors.col(c)));
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Covector p = rng.normal_vector(model.m_dim());
    const Vector g = form.gradient(p);
    for (const auto& act : actions) worst = std::max(worst, std::abs(g.dot(act * p)));
  }
  return worst;
}

}  // namespace gokit
