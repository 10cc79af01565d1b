#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gokit/equilibria.hpp"
#include "gokit/homspace.hpp"

namespace gokit {

enum class GoVerdict { Go, NotGo, Inconclusive };
const char* to_string(GoVerdict v);

/// Sampled evidence for the geodesic-orbit property. A `Go` verdict means
/// every tested momentum admitted a relative equilibrium vector; sampling
/// cannot prove the statement for all p.
struct GoReport {
  GoVerdict verdict = GoVerdict::Inconclusive;
  int samples_tested = 0;
  int unsolvable = 0;
  /// Samples unsolvable at tol but solvable at 10 tol.
  int borderline = 0;
  std::optional<Covector> counterexample;
  double counterexample_residual = 0.0;
  double max_residual = 0.0;
  std::uint64_t seed = 0;
  /// Fixed tolerance, or empty when each sample used default_tolerance().
  std::optional<double> tol;
};

struct GoTestOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::vector<Covector> pinned;
};

/// Solvability sweep over: `samples` random unit directions of m*, every
/// coordinate axis, every pairwise axis sum, and the pinned points.
GoReport go_test(const HomogeneousModel& model, const EnergyForm& form,
                 const GoTestOptions& options = {});

/// Value of a geodesic graph at one momentum.
struct GraphSample {
  Covector p;
  AlgebraVector xi;
  /// sqrt(xi^T Q xi)
  double q_norm = 0.0;
  /// Dimension of the solution set at p.
  Eigen::Index uniqueness_rank = 0;
  /// Membership residual of xi in the solution set at p.
  double membership = 0.0;
  /// Infinitesimal Ad(K)-invariance defect of Q; nonzero means the
  /// selection is not guaranteed K-equivariant.
  double q_invariance = 0.0;
};

/// Q-minimal relative equilibrium vector at p. Q defaults to the identity.
/// Throws NoEquilibrium when the system at p is unsolvable.
GraphSample min_norm_graph(const HomogeneousModel& model, const EnergyForm& form,
                           const Covector& p, const std::optional<Matrix>& q = std::nullopt,
                           std::optional<double> tol = std::nullopt);

/// xi(p) = dh(f*(p)). Checked against the solution set of the induced form
/// h o f*; throws InternalConsistency when membership fails, which signals
/// a non-invariant h.
GraphSample graph_from_invariant(const HomogeneousModel& model,
                                 const InvariantPolynomial& h, const Covector& p,
                                 std::optional<double> tol = std::nullopt);

/// Largest |(dh_o(p) | w)| over an orthonormal basis w of the directions
/// ad*_a f*(p) that stay inside m*.
double co_condition_residual(const HomogeneousModel& model, const EnergyForm& form,
                             const Covector& p);

enum class NatRedVerdict { NaturallyReductiveEvidence, NotNaturallyReductive, Inconclusive };
const char* to_string(NatRedVerdict v);

struct NatRedReport {
  NatRedVerdict verdict = NatRedVerdict::Inconclusive;
  /// Least-squares linear map m* -> g fitted to the canonical graph (n x d).
  std::optional<Matrix> linear_candidate;
  /// Max componentwise misfit of the linear map on the fitting samples.
  double fit_residual = 0.0;
  /// Max membership residual of the linear map on fresh samples.
  double membership_residual = 0.0;
  /// Max |L kappa.p - ad_kappa L p| over isotropy basis vectors.
  double equivariance_residual = 0.0;
  /// Max |xi(p + q) - xi(p) - xi(q)| of the canonical graph.
  double additivity_violation = 0.0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  GoVerdict go = GoVerdict::Inconclusive;
};

struct NatRedOptions {
  int n_fit = 200;
  int n_verify = 100;
  std::uint64_t seed = 0;
  double tol = 1e-8;
};

NatRedReport natural_reductivity_analysis(const HomogeneousModel& model,
                                          const EnergyForm& form,
                                          const NatRedOptions& options = {});

/// max over lambda of |xi(lambda p) - lambda xi(p)| for the identity-norm
/// minimal graph.
double graph_homogeneity_check(const HomogeneousModel& model, const EnergyForm& form,
                               const Covector& p, const std::vector<double>& lambdas);

}  // namespace gokit
