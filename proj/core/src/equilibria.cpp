#include "gokit/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "gokit/error.hpp"

namespace gokit {

double default_tolerance(const EnergyForm& form, const Covector& p) {
  return 1e-9 * (1.0 + p.norm() + form.scale_at(p));
}

Matrix stationarity_matrix(const HomogeneousModel& model, const Covector& p) {
  const StructureTensor& g = model.algebra();
  const DualVector b = model.f_star(p);
  const int n = g.dim();
  Matrix t = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i : model.m_indices()) s += b(i) * g.c(k, j, i);
      t(j, k) = s;
    }
  return t;
}

AffineSolutionSet solve_equilibria_at(const HomogeneousModel& model,
                                      const EnergyForm& form, const Covector& p,
                                      std::optional<double> tol,
                                      std::optional<double> rank_cutoff) {
  if (form.dim() != model.m_dim()) {
    throw InvalidInput("energy form has dimension " + std::to_string(form.dim()) +
                       ", model has m-dimension " + std::to_string(model.m_dim()));
  }
  if (p.size() != model.m_dim()) {
    throw InvalidInput("covector has length " + std::to_string(p.size()) +
                       ", expected " + std::to_string(model.m_dim()));
  }
  if (tol && !(*tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (!p.allFinite()) throw InvalidInput("covector is not finite");

  const int n = model.dim();
  const int d = model.m_dim();
  Matrix a = Matrix::Zero(d + n, n);
  Vector rhs = Vector::Zero(d + n);
  const Vector grad = form.gradient(p);
  for (int r = 0; r < d; ++r) {
    a(r, model.m_indices()[r]) = 1.0;
    rhs(r) = grad(r);
  }
  a.bottomRows(n) = stationarity_matrix(model, p);

  const LeastSquaresSolution ls = min_norm_solve(a, rhs, rank_cutoff);
  AffineSolutionSet out;
  out.tol = tol.value_or(default_tolerance(form, p));
  out.particular = ls.x;
  out.nullspace = ls.kernel;
  out.residual = ls.residual;
  out.solvable = ls.residual <= out.tol;
  return out;
}

MembershipResidual membership_residual(const HomogeneousModel& model,
                                       const EnergyForm& form, const Covector& p,
                                       const AlgebraVector& a) {
  MembershipResidual r;
  r.momentum = (model.f_apply(a) - form.gradient(p)).cwiseAbs().maxCoeff();
  r.stationarity = (stationarity_matrix(model, p) * a).cwiseAbs().maxCoeff();
  return r;
}

double lagrangian_equilibrium_residual(const HomogeneousModel& model,
                                       const EnergyForm& lagrangian,
                                       const AlgebraVector& a) {
  if (lagrangian.dim() != model.m_dim()) throw InvalidInput("Lagrangian dimension mismatch");
  const Covector dl = lagrangian.gradient(model.f_apply(a));
  // (dL | f([a, e_j])) = (f*(dL) | [a, e_j]) = (ad_a^T f*(dL))_j
  const Vector r = model.algebra().ad_matrix(a).transpose() * model.f_star(dl);
  return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

EnergyForm legendre_to_hamiltonian(const EnergyForm& lagrangian) {
  if (!lagrangian.is_quadratic()) {
    throw InvalidInput("Legendre transform is implemented for quadratic forms only");
  }
  const Matrix& g = lagrangian.matrix();
  Eigen::JacobiSVD<Matrix> svd(g);
  const auto& s = svd.singularValues();
  const double cutoff = default_rank_cutoff(g);
  if (s(s.size() - 1) <= cutoff) {
    throw Error(ErrorKind::DegenerateLagrangian, "Lagrangian form is singular");
  }
  Matrix inv = g.fullPivLu().inverse();
  inv = 0.5 * (inv + inv.transpose()).eval();
  return EnergyForm::quadratic(std::move(inv));
}

OrbitSearchResult orbit_extremum_search(const HomogeneousModel& model,
                                        const EnergyForm& lagrangian,
                                        const AlgebraVector& a0,
                                        const OrbitSearchOptions& options) {
  if (a0.size() != model.dim()) throw InvalidInput("a0 has the wrong length");
  if (a0.isZero(0.0)) throw InvalidInput("a0 must be non-zero");
  if (options.max_iter < 0 || !(options.step > 0.0) || !(options.tol > 0.0)) {
    throw InvalidInput("orbit search needs max_iter >= 0, step > 0 and tol > 0");
  }
  const StructureTensor& g = model.algebra();
  const double sign = options.maximize ? 1.0 : -1.0;

  auto objective = [&](const AlgebraVector& a) {
    return sign * lagrangian.value(model.f_apply(a));
  };
  // b = sign * (-ad_a^T grad) gives [b, a] = sign * ad_a ad_a^T grad.
  auto direction = [&](const AlgebraVector& a) -> AlgebraVector {
    const DualVector grad = model.f_star(lagrangian.gradient(model.f_apply(a)));
    return -sign * (g.ad_matrix(a).transpose() * grad);
  };

  OrbitSearchResult cur{a0, lagrangian_equilibrium_residual(model, lagrangian, a0),
                        lagrangian.value(model.f_apply(a0)), 0};
  double value = objective(a0);
  double step = options.step;

  for (int it = 0; it < options.max_iter && cur.residual > options.tol; ++it) {
    const AlgebraVector b = direction(cur.a);
    AlgebraVector trial;
    double trial_value = value;
    bool moved = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      const Matrix move = (step * g.ad_matrix(b)).exp();
      trial = move * cur.a;
      trial_value = objective(trial);
      // Near a critical point the gain is O(residual^2) and drowns in
      // rounding; accept steps that do not lose more than that.
      const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                           std::max(1.0, std::abs(value));
      if (trial_value > value - slack) {
        moved = true;
        break;
      }
      step *= 0.5;
    }
    cur.iterations = it + 1;
    if (!moved) break;
    cur.a = trial;
    value = trial_value;
    cur.objective = sign * value;
    cur.residual = lagrangian_equilibrium_residual(model, lagrangian, cur.a);
    step = std::min(options.step, 2.0 * step);
  }

  if (cur.residual > options.tol) {
    std::ostringstream os;
    os << "orbit search stopped at residual " << cur.residual << " after "
       << cur.iterations << " iterations";
    throw NoConvergence(os.str(), cur.a, cur.residual);
  }
  return cur;
}

}  // namespace gokit
