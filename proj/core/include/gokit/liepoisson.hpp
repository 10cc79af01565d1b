#pragma once

#include <iosfwd>
#include <vector>

#include "gokit/liealg.hpp"
#include "gokit/polynomial.hpp"

namespace gokit {

/// Reduced (Lie-Poisson) dynamics on g* for a Hamiltonian h.
///
/// Sign convention: d/dt (mu | x) = (mu | [dh(mu), x]) for all x, i.e.
/// mu' = (ad_{dh(mu)})^T mu = -coad(dh(mu)) mu. On so(3) this is the
/// body-frame Euler equation m' = m x omega.

struct MomentumState {
  double t = 0.0;
  DualVector mu;
};

using Trajectory = std::vector<MomentumState>;

DualVector lp_vector_field(const StructureTensor& algebra, const Polynomial& h,
                           const DualVector& mu);

/// Classical fixed-step RK4 from t = 0 to t_end with ceil(t_end / dt) steps;
/// the final step is shortened to land on t_end. Throws InvalidInput for
/// non-positive dt or t_end and Divergence (message names the last finite
/// time) when the state stops being finite.
Trajectory integrate(const StructureTensor& algebra, const Polynomial& h,
                     const DualVector& mu0, double dt, double t_end);

/// Per-function max_t |C(mu(t)) - C(mu(0))| / max(1, |C(mu(0))|).
std::vector<double> casimir_drift(const Trajectory& trajectory,
                                  const std::vector<Polynomial>& casimirs);

/// CSV with header t,mu_0,...,mu_{n-1} and 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);

}  // namespace gokit
