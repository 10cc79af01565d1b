#include "gokit/goanalysis.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include "gokit/error.hpp"
#include "gokit/rng.hpp"

namespace gokit {

const char* to_string(GoVerdict v) {
  switch (v) {
    case GoVerdict::Go: return "go";
    case GoVerdict::NotGo: return "not_go";
    case GoVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(NatRedVerdict v) {
  switch (v) {
    case NatRedVerdict::NaturallyReductiveEvidence: return "naturally_reductive_evidence";
    case NatRedVerdict::NotNaturallyReductive: return "not_naturally_reductive";
    case NatRedVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

GoReport go_test(const HomogeneousModel& model, const EnergyForm& form,
                 const GoTestOptions& options) {
  if (options.samples < 1) throw InvalidInput("go_test needs samples >= 1");
  if (options.tol && !(*options.tol > 0.0)) throw InvalidInput("tolerance must be positive");
  const int d = model.m_dim();
  for (const auto& p : options.pinned)
    if (p.size() != d) throw InvalidInput("pinned covector has the wrong length");

  std::vector<Covector> points;
  points.reserve(options.samples + d + d * (d - 1) / 2 + options.pinned.size());
  CounterRng rng(options.seed, "go_test");
  for (int s = 0; s < options.samples; ++s) points.push_back(rng.unit_vector(d));
  for (int i = 0; i < d; ++i) points.push_back(Covector::Unit(d, i));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) points.push_back(Covector::Unit(d, i) + Covector::Unit(d, j));
  points.insert(points.end(), options.pinned.begin(), options.pinned.end());

  GoReport report;
  report.seed = options.seed;
  report.tol = options.tol;
  for (const auto& p : points) {
    const AffineSolutionSet set = solve_equilibria_at(model, form, p, options.tol);
    ++report.samples_tested;
    report.max_residual = std::max(report.max_residual, set.residual);
    if (set.solvable) continue;
    const AffineSolutionSet loose = solve_equilibria_at(model, form, p, 10.0 * set.tol);
    if (loose.solvable) {
      ++report.borderline;
      continue;
    }
    if (!report.counterexample) {
      report.counterexample = p;
      report.counterexample_residual = set.residual;
    }
    ++report.unsolvable;
  }
  if (report.unsolvable > 0) {
    report.verdict = GoVerdict::NotGo;
  } else if (report.borderline > 0) {
    report.verdict = GoVerdict::Inconclusive;
  } else {
    report.verdict = GoVerdict::Go;
  }
  return report;
}

GraphSample min_norm_graph(const HomogeneousModel& model, const EnergyForm& form,
                           const Covector& p, const std::optional<Matrix>& q,
                           std::optional<double> tol) {
  const int n = model.dim();
  const Matrix qm = q.value_or(Matrix::Identity(n, n));
  if (qm.rows() != n || qm.cols() != n) throw InvalidInput("Q must be n x n");

  const AffineSolutionSet set = solve_equilibria_at(model, form, p, tol);
  if (!set.solvable) {
    throw Error(ErrorKind::NoEquilibrium,
                "no relative equilibrium vector at this momentum (residual " +
                    std::to_string(set.residual) + ")");
  }
  GraphSample out;
  out.p = p;
  out.uniqueness_rank = set.uniqueness_rank();
  out.q_invariance = model.algebra().infinitesimal_invariance_residual(qm, model.k_basis());

  const Matrix& nb = set.nullspace.vectors;
  if (nb.cols() == 0) {
    out.xi = set.particular;
  } else {
    const Matrix gram = nb.transpose() * qm * nb;
    Eigen::LDLT<Matrix> ldlt(gram);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      throw InvalidInput("Q is not positive definite on the solution directions");
    }
    const Vector t = ldlt.solve(nb.transpose() * (qm * set.particular));
    out.xi = set.particular - nb * t;
  }
  out.q_norm = std::sqrt(std::max(0.0, out.xi.dot(qm * out.xi)));
  out.membership = membership_residual(model, form, p, out.xi).max();
  return out;
}

GraphSample graph_from_invariant(const HomogeneousModel& model,
                                 const InvariantPolynomial& h, const Covector& p,
                                 std::optional<double> tol) {
  if (h.num_vars() != model.dim()) throw InvalidInput("invariant is not a function on g*");
  const EnergyForm induced = EnergyForm::polynomial(model.restrict(h));
  GraphSample out;
  out.p = p;
  out.xi = h.gradient(model.f_star(p));
  out.q_norm = out.xi.norm();
  out.membership = membership_residual(model, induced, p, out.xi).max();
  const AffineSolutionSet set = solve_equilibria_at(model, induced, p, tol);
  out.uniqueness_rank = set.uniqueness_rank();
  if (out.membership > set.tol) {
    throw Error(ErrorKind::InternalConsistency,
                "dh(f*(p)) is not a relative equilibrium vector (residual " +
                    std::to_string(out.membership) + "); h is probably not Ad*-invariant");
  }
  return out;
}

double co_condition_residual(const HomogeneousModel& model, const EnergyForm& form,
                             const Covector& p) {
  const StructureTensor& g = model.algebra();
  const int n = g.dim();
  const DualVector b = model.f_star(p);
  Matrix w(n, n);
  for (int j = 0; j < n; ++j) w.col(j) = g.coad_matrix(g.basis_vector(j)) * b;

  Matrix wk(model.k_dim(), n);
  Matrix wm(model.m_dim(), n);
  for (int r = 0; r < model.k_dim(); ++r) wk.row(r) = w.row(model.k_indices()[r]);
  for (int r = 0; r < model.m_dim(); ++r) wm.row(r) = w.row(model.m_indices()[r]);

  const SubspaceBasis admissible = null_space(wk);
  if (admissible.rank() == 0) return 0.0;
  const Matrix dirs = wm * admissible.vectors;
  if (dirs.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  const SubspaceBasis span = column_space(dirs);
  if (span.rank() == 0) return 0.0;
  return (span.vectors.transpose() * form.gradient(p)).cwiseAbs().maxCoeff();
}

NatRedReport natural_reductivity_analysis(const HomogeneousModel& model,
                                          const EnergyForm& form,
                                          const NatRedOptions& options) {
  if (options.n_fit < 1 || options.n_verify < 1 || !(options.tol > 0.0)) {
    throw InvalidInput("natural reductivity analysis needs n_fit, n_verify >= 1 and tol > 0");
  }
  NatRedReport report;
  report.seed = options.seed;
  report.tol = options.tol;

  const GoReport go = go_test(model, form, {options.n_fit, options.seed, std::nullopt, {}});
  report.go = go.verdict;
  // Naturally reductive spaces are g.o., so a counterexample settles it.
  if (go.verdict == GoVerdict::NotGo) report.verdict = NatRedVerdict::NotNaturallyReductive;
  if (go.verdict != GoVerdict::Go) return report;

  const int n = model.dim();
  const int d = model.m_dim();
  const auto graph = [&](const Covector& p) { return min_norm_graph(model, form, p).xi; };

  Matrix ps(options.n_fit, d);
  Matrix xis(options.n_fit, n);
  CounterRng fit_rng(options.seed, "natred_fit");
  try {
    for (int s = 0; s < options.n_fit; ++s) {
      const Covector p = fit_rng.normal_vector(d);
      ps.row(s) = p.transpose();
      xis.row(s) = graph(p).transpose();
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoEquilibrium) return report;
    throw;
  }

  Eigen::JacobiSVD<Matrix> svd(ps, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Matrix lt = svd.solve(xis);  // d x n
  const Matrix lin = lt.transpose();  // n x d
  report.linear_candidate = lin;
  report.fit_residual = (ps * lt - xis).cwiseAbs().maxCoeff();

  const SubspaceBasis kb = model.k_basis();
  for (Eigen::Index c = 0; c < kb.rank(); ++c) {
    const AlgebraVector kappa = kb.vectors.col(c);
    const Matrix lhs = lin * model.isotropy_action(kappa);
    const Matrix rhs = model.algebra().ad_matrix(kappa) * lin;
    report.equivariance_residual =
        std::max(report.equivariance_residual, (lhs - rhs).cwiseAbs().maxCoeff());
  }

  CounterRng verify_rng(options.seed, "natred_verify");
  try {
    for (int s = 0; s < options.n_verify; ++s) {
      const Covector p = verify_rng.normal_vector(d);
      const Covector q = verify_rng.normal_vector(d);
      report.membership_residual = std::max(
          report.membership_residual, membership_residual(model, form, p, lin * p).max());
      const Vector defect = graph(p + q) - graph(p) - graph(q);
      report.additivity_violation =
          std::max(report.additivity_violation, defect.cwiseAbs().maxCoeff());
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoEquilibrium) return report;
    throw;
  }

  if (report.fit_residual < options.tol && report.equivariance_residual < options.tol &&
      report.membership_residual < options.tol) {
    report.verdict = NatRedVerdict::NaturallyReductiveEvidence;
  } else if (report.membership_residual > 1e3 * options.tol) {
    report.verdict = NatRedVerdict::NotNaturallyReductive;
  }
  return report;
}

double graph_homogeneity_check(const HomogeneousModel& model, const EnergyForm& form,
                               const Covector& p, const std::vector<double>& lambdas) {
  const AlgebraVector base = min_norm_graph(model, form, p).xi;
  double worst = 0.0;
  for (double lambda : lambdas) {
    const AlgebraVector scaled = min_norm_graph(model, form, lambda * p).xi;
    worst = std::max(worst, (scaled - lambda * base).norm());
  }
  return worst;
}

}  // namespace gokit
