#include "gokit/liepoisson.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gokit/error.hpp"

namespace gokit {

DualVector lp_vector_field(const StructureTensor& algebra, const Polynomial& h,
                           const DualVector& mu) {
  if (h.num_vars() != algebra.dim()) throw InvalidInput("Hamiltonian is not a function on g*");
  return algebra.ad_matrix(h.gradient(mu)).transpose() * mu;
}

Trajectory integrate(const StructureTensor& algebra, const Polynomial& h,
                     const DualVector& mu0, double dt, double t_end) {
  if (!(dt > 0.0) || !(t_end > 0.0)) throw InvalidInput("dt and t_end must be positive");
  if (mu0.size() != algebra.dim()) throw InvalidInput("initial momentum has the wrong length");
  if (!mu0.allFinite()) throw InvalidInput("initial momentum is not finite");

  // Guard against t_end/dt landing a rounding error above an integer.
  const double ratio = t_end / dt;
  auto steps = static_cast<long long>(std::ceil(ratio * (1.0 - 1e-12)));
  steps = std::max<long long>(steps, 1);

  Trajectory traj;
  traj.reserve(static_cast<std::size_t>(steps) + 1);
  traj.push_back({0.0, mu0});
  DualVector mu = mu0;
  auto field = [&](const DualVector& x) { return lp_vector_field(algebra, h, x); };

  for (long long s = 0; s < steps; ++s) {
    const double t0 = static_cast<double>(s) * dt;
    const double t1 = s + 1 == steps ? t_end : static_cast<double>(s + 1) * dt;
    const double hstep = t1 - t0;
    const DualVector k1 = field(mu);
    const DualVector k2 = field(mu + 0.5 * hstep * k1);
    const DualVector k3 = field(mu + 0.5 * hstep * k2);
    const DualVector k4 = field(mu + hstep * k3);
    DualVector next = mu + (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite()) {
      std::ostringstream os;
      os << "Lie-Poisson integration diverged after t = " << t0;
      throw Error(ErrorKind::Divergence, os.str());
    }
    mu = std::move(next);
    traj.push_back({t1, mu});
  }
  return traj;
}

std::vector<double> casimir_drift(const Trajectory& trajectory,
                                  const std::vector<Polynomial>& casimirs) {
  std::vector<double> drift(casimirs.size(), 0.0);
  if (trajectory.empty()) return drift;
  for (std::size_t c = 0; c < casimirs.size(); ++c) {
    const double c0 = casimirs[c].value(trajectory.front().mu);
    const double denom = std::max(1.0, std::abs(c0));
    for (const auto& state : trajectory)
      drift[c] = std::max(drift[c], std::abs(casimirs[c].value(state.mu) - c0) / denom);
  }
  return drift;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  const auto old_precision = os.precision(17);
  os << "t";
  const Eigen::Index n = trajectory.empty() ? 0 : trajectory.front().mu.size();
  for (Eigen::Index i = 0; i < n; ++i) os << ",mu_" << i;
  os << "\n";
  for (const auto& s : trajectory) {
    os << s.t;
    for (Eigen::Index i = 0; i < s.mu.size(); ++i) os << ',' << s.mu(i);
    os << "\n";
  }
  os.precision(old_precision);
}

}  // namespace gokit
