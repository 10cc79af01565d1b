#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gokit/liealg.hpp"
#include "gokit/linalg.hpp"
#include "gokit/polynomial.hpp"

namespace gokit {

/// Momentum p at the origin, in the coordinates dual to the m basis.
using Covector = Eigen::VectorXd;
/// Velocity v at the origin, in the m basis (T_oM identified with m via f).
using TangentVector = Eigen::VectorXd;

/// Ad*-invariant candidate function on g*, in the dual basis coordinates.
using InvariantPolynomial = Polynomial;

/// A homogeneous space G/K at its origin: an algebra with a basis-aligned
/// splitting g = k + m. The evaluation map f is the coordinate projection
/// onto m, and its transpose f* is the zero-padded embedding m* -> g*.
class HomogeneousModel {
 public:
  /// Throws InvalidInput if the index sets do not partition the basis or
  /// k is not closed under the bracket (within `closure_tol`).
  HomogeneousModel(StructureTensor algebra, std::vector<int> k_indices,
                   std::vector<int> m_indices, double closure_tol = 1e-10);

  const StructureTensor& algebra() const noexcept { return algebra_; }
  const std::vector<int>& k_indices() const noexcept { return k_; }
  const std::vector<int>& m_indices() const noexcept { return m_; }
  int dim() const noexcept { return algebra_.dim(); }
  int m_dim() const noexcept { return static_cast<int>(m_.size()); }
  int k_dim() const noexcept { return static_cast<int>(k_.size()); }

  /// Max m-component of [k_i, k_j] over isotropy basis pairs.
  double k_closure_residual() const noexcept { return k_closure_residual_; }
  /// Max k-component of [k_i, m_j]; zero for a reductive decomposition.
  double reductive_residual() const noexcept { return reductive_residual_; }
  bool reductive_verified() const noexcept { return reductive_residual_ <= 1e-10; }
  /// Rank of f. Equal to m_dim for a basis-aligned splitting, so ker f = k.
  int f_rank() const noexcept { return m_dim(); }

  TangentVector f_apply(const AlgebraVector& a) const;
  DualVector f_star(const Covector& p) const;
  /// Inverse of f restricted to m: embeds an m-vector into g.
  AlgebraVector m_embed(const TangentVector& v) const;

  SubspaceBasis k_basis() const;
  SubspaceBasis m_basis() const;

  /// Infinitesimal isotropy action of a k-element on m*: the m x m block of
  /// the coadjoint matrix. Exact for reductive splittings.
  Matrix isotropy_action(const AlgebraVector& kappa) const;

  /// h o f*: the restriction of a function on g* to m*.
  Polynomial restrict(const Polynomial& h) const;

 private:
  StructureTensor algebra_;
  std::vector<int> k_;
  std::vector<int> m_;
  double k_closure_residual_ = 0.0;
  double reductive_residual_ = 0.0;
};

/// H_o (or L_o) on the (co)tangent space at the origin. Quadratic forms are
/// v -> 1/2 v^T S v with S exactly symmetric; polynomial forms carry a
/// sparse polynomial in the m coordinates.
class EnergyForm {
 public:
  enum class Kind { Quadratic, Polynomial };

  static EnergyForm quadratic(Matrix s);
  static EnergyForm polynomial(Polynomial poly);

  Kind kind() const noexcept {
    return std::holds_alternative<Matrix>(data_) ? Kind::Quadratic : Kind::Polynomial;
  }
  bool is_quadratic() const noexcept { return kind() == Kind::Quadratic; }
  int dim() const noexcept { return dim_; }

  /// Throws InvalidInput for polynomial forms.
  const Matrix& matrix() const;
  /// Throws InvalidInput for quadratic forms.
  const Polynomial& poly() const;
  /// The form as a polynomial regardless of kind.
  Polynomial as_polynomial() const;

  double value(const Vector& p) const;
  /// Exact gradient: S p, or the analytic gradient of the polynomial.
  Vector gradient(const Vector& p) const;

  /// Scale used by default tolerances: |S|_2 for quadratic forms,
  /// |grad(p)| / max(1, |p|) for polynomial ones.
  double scale_at(const Vector& p) const;

  /// True for quadratic forms whose S has only positive eigenvalues.
  bool is_positive_definite() const;
  /// True for quadratic forms with a negative or zero eigenvalue.
  bool is_indefinite() const { return is_quadratic() && !is_positive_definite(); }

 private:
  EnergyForm(int dim, std::variant<Matrix, Polynomial> data)
      : dim_(dim), data_(std::move(data)) {}

  int dim_;
  std::variant<Matrix, Polynomial> data_;
};

/// Max over seeded random (mu, a) of |dh(mu) . ad*_a mu|: the infinitesimal
/// Ad*-invariance defect of `h` on g*.
double ad_star_invariance_residual(const StructureTensor& algebra,
                                   const InvariantPolynomial& h, int samples,
                                   std::uint64_t seed);

/// Max over isotropy basis vectors and seeded random p of
/// |dH_o(p) . (kappa . p)|: the Ad*(K)-invariance defect of an energy form.
double isotropy_invariance_residual(const HomogeneousModel& model,
                                    const EnergyForm& form, int samples,
                                    std::uint64_t seed);

}  // namespace gokit
