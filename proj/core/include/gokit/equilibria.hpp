#pragma once

#include <optional>

#include "gokit/homspace.hpp"
#include "gokit/linalg.hpp"

namespace gokit {

/// Relative-equilibrium vectors at (o, p): particular + span(nullspace).
struct AffineSolutionSet {
  bool solvable = false;
  /// Minimum-norm solution of the stacked system (least-squares when
  /// unsolvable).
  AlgebraVector particular;
  /// Orthonormal basis of the homogeneous solutions.
  SubspaceBasis nullspace;
  /// |A x - rhs| of the stacked system at `particular`.
  double residual = 0.0;
  /// Tolerance the solvability verdict was taken at.
  double tol = 0.0;

  AlgebraVector point(const Vector& t) const {
    return particular + nullspace.vectors * t;
  }
  Eigen::Index uniqueness_rank() const { return nullspace.rank(); }
};

/// 1e-9 * (1 + |p| + scale(form, p)).
double default_tolerance(const EnergyForm& form, const Covector& p);

/// Linear map a -> ((f*(p) | [a, e_j]))_j, one row per basis vector e_j.
Matrix stationarity_matrix(const HomogeneousModel& model, const Covector& p);

/// Solves dH_o(p) = f(a) together with (f*(p) | [a, b]) = 0 for all b.
///
/// The unknown is a in g. The d momentum rows fix the m-components of a and
/// the n stationarity rows ask a to stabilise f*(p) under the coadjoint
/// action. The system is solved by SVD; it is declared solvable when the
/// component of the right-hand side outside the column space (the
/// least-squares residual) is at most `tol`, which is the augmented-rank
/// test rank(A) == rank([A | rhs]) at that tolerance.
///
/// Throws InvalidInput when tol <= 0 or dimensions disagree.
AffineSolutionSet solve_equilibria_at(const HomogeneousModel& model,
                                      const EnergyForm& form, const Covector& p,
                                      std::optional<double> tol = std::nullopt,
                                      std::optional<double> rank_cutoff = std::nullopt);

struct MembershipResidual {
  /// max |f(a) - dH_o(p)|
  double momentum = 0.0;
  /// max_j |(f*(p) | [a, e_j])|
  double stationarity = 0.0;

  double max() const { return momentum > stationarity ? momentum : stationarity; }
};

/// How far `a` is from being a relative equilibrium vector at (o, p).
MembershipResidual membership_residual(const HomogeneousModel& model,
                                       const EnergyForm& form, const Covector& p,
                                       const AlgebraVector& a);

/// max_j |(dL_o(f(a)) | f([a, e_j]))|. Zero exactly when a is a relative
/// equilibrium vector for the Lagrangian whose restriction to T_oM is
/// `lagrangian`.
double lagrangian_equilibrium_residual(const HomogeneousModel& model,
                                       const EnergyForm& lagrangian,
                                       const AlgebraVector& a);

/// Legendre transform of a regular quadratic Lagrangian 1/2 v^T G v: the
/// Hamiltonian 1/2 p^T G^-1 p. Throws DegenerateLagrangian when G is
/// singular and InvalidInput for non-quadratic forms.
EnergyForm legendre_to_hamiltonian(const EnergyForm& lagrangian);

struct OrbitSearchOptions {
  int max_iter = 10000;
  double step = 0.1;
  double tol = 1e-8;
  /// Ascend to a maximum of L_o o f on the orbit, or descend to a minimum.
  bool maximize = true;
};

struct OrbitSearchResult {
  AlgebraVector a;
  double residual = 0.0;
  double objective = 0.0;
  int iterations = 0;
};

/// Extremises L_o(f(a)) over the adjoint orbit through a0 until the
/// Lagrangian equilibrium residual drops to `tol`.
///
/// Each step moves along the orbit by a <- exp(eps ad_b) a with
/// b = -+ ad_a^T grad, whose first-order displacement [b, a] is the
/// orbit-tangent projection of the gradient. Steps that fail to improve the
/// objective are halved. Throws NoConvergence (carrying the best iterate)
/// after max_iter steps.
OrbitSearchResult orbit_extremum_search(const HomogeneousModel& model,
                                        const EnergyForm& lagrangian,
                                        const AlgebraVector& a0,
                                        const OrbitSearchOptions& options = {});

}  // namespace gokit
