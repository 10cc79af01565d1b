#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "gokit/builtins.hpp"
#include "gokit/equilibria.hpp"
#include "gokit/error.hpp"
#include "gokit/rng.hpp"

namespace gokit {
namespace {

using namespace builtins::su3_index;

Matrix random_spd(CounterRng& rng, int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = rng.normal();
  Matrix s = m * m.transpose() + d * Matrix::Identity(d, d);
  return 0.5 * (s + s.transpose());
}

SubspaceBasis isotropy_span() {
  Matrix k = Matrix::Zero(8, 3);
  k(A, 0) = k(B, 1) = k(C, 2) = 1.0;
  return {k};
}

TEST(Solve, AbelianParticularIsPaddedGradient) {
  const HomogeneousModel model(StructureTensor::abelian(5), {0, 1}, {2, 3, 4});
  CounterRng rng(1, "abelian");
  const auto form = EnergyForm::quadratic(random_spd(rng, 3));
  const Covector p = rng.normal_vector(3);
  const auto set = solve_equilibria_at(model, form, p);
  ASSERT_TRUE(set.solvable);
  EXPECT_LT((set.particular - model.m_embed(form.gradient(p))).norm(), 1e-12);
  EXPECT_LT(subspace_angle(set.nullspace, model.k_basis()), 1e-12);
}

TEST(Solve, DegenerateMomentumAlongZ) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  Covector p = Covector::Unit(5, 4);
  const auto set = solve_equilibria_at(built.model, built.form, p);
  ASSERT_TRUE(set.solvable);
  AlgebraVector expected = AlgebraVector::Zero(8);
  expected(Z) = 4.0;
  EXPECT_LT((set.particular - expected).norm(), 1e-12);
  EXPECT_EQ(set.uniqueness_rank(), 3);
  EXPECT_LT(subspace_angle(set.nullspace, isotropy_span()), 1e-8);
}

TEST(Solve, SpotValueFromClosedForm) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  Covector p(5);
  p << 1, 0, 0, 0, 1;
  const auto set = solve_equilibria_at(built.model, built.form, p);
  ASSERT_TRUE(set.solvable);
  EXPECT_EQ(set.uniqueness_rank(), 0);
  AlgebraVector expected = AlgebraVector::Zero(8);
  expected(E1) = 2.0;
  expected(Z) = 4.0;
  expected(A) = 2.0 * std::numbers::sqrt3;
  EXPECT_LT((set.particular - expected).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Solve, InputErrors) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const Covector p = Covector::Unit(5, 0);
  EXPECT_THROW(solve_equilibria_at(built.model, built.form, p, 0.0), InvalidInput);
  EXPECT_THROW(solve_equilibria_at(built.model, built.form, p, -1.0), InvalidInput);
  EXPECT_THROW(solve_equilibria_at(built.model, built.form, Covector::Zero(4)), InvalidInput);
  EXPECT_THROW(solve_equilibria_at(built.model, EnergyForm::quadratic(Matrix::Identity(4, 4)), p),
               InvalidInput);
}

TEST(Solve, ReSubstitution) {
  CounterRng rng(2, "resub");
  for (auto [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {3.0, 0.5}}) {
    const auto built = builtins::su3_su2(a, b);
    for (int s = 0; s < 20; ++s) {
      const Covector p = rng.normal_vector(5);
      const auto set = solve_equilibria_at(built.model, built.form, p);
      ASSERT_TRUE(set.solvable);
      // Orthonormal nullspace.
      const Matrix gram = set.nullspace.vectors.transpose() * set.nullspace.vectors;
      EXPECT_TRUE(gram.isIdentity(1e-12));
      for (int t = 0; t < 10; ++t) {
        const AlgebraVector x = set.point(rng.normal_vector(set.uniqueness_rank()));
        EXPECT_LT(membership_residual(built.model, built.form, p, x).max(), 10 * set.tol);
      }
    }
  }
}

TEST(Solve, ScalingProperty) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  CounterRng rng(3, "scaling");
  for (int s = 0; s < 20; ++s) {
    const Covector p = rng.normal_vector(5);
    const auto set = solve_equilibria_at(built.model, built.form, p);
    ASSERT_TRUE(set.solvable);
    for (double lambda : {-1.0, 0.5, 3.0}) {
      const auto scaled = solve_equilibria_at(built.model, built.form, lambda * p);
      ASSERT_TRUE(scaled.solvable);
      EXPECT_LT(membership_residual(built.model, built.form, lambda * p, lambda * set.particular).max(),
                10 * scaled.tol);
    }
  }
}

TEST(Solve, ZeroMomentumGivesIsotropy) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto set = solve_equilibria_at(built.model, built.form, Covector::Zero(5));
  ASSERT_TRUE(set.solvable);
  EXPECT_TRUE(set.particular.isZero(0.0));
  EXPECT_EQ(set.uniqueness_rank(), 3);
  EXPECT_LT(subspace_angle(set.nullspace, isotropy_span()), 1e-12);
}

TEST(Solve, IsotropyEquivariance) {
  // Moving p by exp(t kappa) on m* moves the solution set by exp(t ad_kappa).
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto& model = built.model;
  CounterRng rng(4, "equivariance");
  for (int s = 0; s < 10; ++s) {
    const Covector p = rng.normal_vector(5);
    AlgebraVector kappa = AlgebraVector::Zero(8);
    kappa.head(3) = rng.normal_vector(3);
    const double t = 0.7;
    const Covector moved_p = (t * model.isotropy_action(kappa)).exp() * p;
    const auto set = solve_equilibria_at(model, built.form, p);
    const AlgebraVector moved_a = (t * model.algebra().ad_matrix(kappa)).exp() * set.particular;
    const auto moved_set = solve_equilibria_at(model, built.form, moved_p);
    ASSERT_TRUE(moved_set.solvable);
    EXPECT_LT(membership_residual(model, built.form, moved_p, moved_a).max(), 1e-10);
    // particular(moved) - moved_a lies in the nullspace.
    const Vector diff = moved_set.particular - moved_a;
    const Vector off = diff - moved_set.nullspace.vectors * (moved_set.nullspace.vectors.transpose() * diff);
    EXPECT_LT(off.norm(), 1e-10);
  }
}

TEST(Lagrangian, IsotropyVectorsHaveZeroResidual) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto lag = legendre_to_hamiltonian(built.form);
  AlgebraVector a = AlgebraVector::Zero(8);
  a.head(3) << 0.3, -1.0, 2.0;
  EXPECT_EQ(lagrangian_equilibrium_residual(built.model, lag, a), 0.0);
}

TEST(Lagrangian, NaturallyReductiveEveryMVectorIsGeodesic) {
  const auto built = builtins::su3_su2(1.0, 1.0);
  const auto lag = legendre_to_hamiltonian(built.form);
  CounterRng rng(5, "natred_lag");
  for (int s = 0; s < 50; ++s) {
    const AlgebraVector a = built.model.m_embed(rng.normal_vector(5));
    EXPECT_LT(lagrangian_equilibrium_residual(built.model, lag, a), 1e-13);
  }
}

TEST(Lagrangian, MissingIsotropyPartIsNotGeodesic) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto lag = legendre_to_hamiltonian(built.form);
  AlgebraVector a = AlgebraVector::Zero(8);
  a(E1) = 1.0;
  a(Z) = 1.0;
  EXPECT_GT(lagrangian_equilibrium_residual(built.model, lag, a), 0.1);
  a(A) = 0.5 * std::numbers::sqrt3;  // closed-form value at v = E1 + Z
  EXPECT_LT(lagrangian_equilibrium_residual(built.model, lag, a), 1e-14);
}

TEST(Lagrangian, AgreesWithHamiltonianMembership) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto lag = legendre_to_hamiltonian(built.form);
  const Matrix g_l = lag.matrix();
  CounterRng rng(6, "agreement");
  int members = 0;
  for (int s = 0; s < 100; ++s) {
    AlgebraVector a;
    if (s % 2 == 0) {
      const auto set = solve_equilibria_at(built.model, built.form, rng.normal_vector(5));
      a = set.point(rng.normal_vector(set.uniqueness_rank()));
    } else {
      a = rng.normal_vector(8);
    }
    const Covector p = g_l * built.model.f_apply(a);
    const double tol = default_tolerance(built.form, p);
    const bool ham = membership_residual(built.model, built.form, p, a).max() <= tol;
    const bool lagr = lagrangian_equilibrium_residual(built.model, lag, a) <= tol;
    EXPECT_EQ(ham, lagr) << "sample " << s;
    members += ham;
  }
  EXPECT_EQ(members, 50);
}

TEST(Legendre, InverseAndRoundTrip) {
  EXPECT_EQ(legendre_to_hamiltonian(EnergyForm::quadratic(Matrix::Identity(3, 3))).matrix(),
            Matrix::Identity(3, 3));
  Vector d(5);
  d << 1, 1, 1, 1, 2;
  const Matrix inv = legendre_to_hamiltonian(EnergyForm::quadratic(d.asDiagonal())).matrix();
  Vector expected(5);
  expected << 1, 1, 1, 1, 0.5;
  EXPECT_LT((inv - Matrix(expected.asDiagonal())).norm(), 1e-15);

  CounterRng rng(7, "legendre");
  const Matrix s = random_spd(rng, 5);
  const auto once = legendre_to_hamiltonian(EnergyForm::quadratic(s));
  EXPECT_LT((once.matrix() * s - Matrix::Identity(5, 5)).norm(), 1e-12);
  const auto twice = legendre_to_hamiltonian(once);
  EXPECT_LT((twice.matrix() - s).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Legendre, Errors) {
  Matrix singular = Matrix::Identity(3, 3);
  singular(2, 2) = 0.0;
  try {
    legendre_to_hamiltonian(EnergyForm::quadratic(singular));
    FAIL() << "expected DegenerateLagrangian";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateLagrangian);
  }
  EXPECT_THROW(legendre_to_hamiltonian(EnergyForm::polynomial(Polynomial::variable(2, 0))),
               InvalidInput);
}

TEST(OrbitSearch, AbelianReturnsStart) {
  const HomogeneousModel model(StructureTensor::abelian(3), {0}, {1, 2});
  const auto lag = EnergyForm::quadratic(Matrix::Identity(2, 2));
  const AlgebraVector a0 = AlgebraVector::Ones(3);
  const auto res = orbit_extremum_search(model, lag, a0);
  EXPECT_EQ(res.iterations, 0);
  EXPECT_EQ(res.a, a0);
}

TEST(OrbitSearch, ConvergesOnSu3Su2) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto lag = legendre_to_hamiltonian(built.form);
  AlgebraVector a0 = AlgebraVector::Zero(8);
  a0(E1) = 1.0;
  a0(Z) = 1.0;
  for (bool maximize : {true, false}) {
    OrbitSearchOptions opts;
    opts.maximize = maximize;
    const auto res = orbit_extremum_search(built.model, lag, a0, opts);
    EXPECT_LT(res.residual, 1e-6);
    EXPECT_LE(res.iterations, 10000);
    // Adjoint orbits preserve the Killing norm.
    EXPECT_NEAR(res.a.norm(), a0.norm(), 1e-9);
    // Cross-check through the Hamiltonian solver at the metric-dual momentum.
    const Covector p = lag.matrix() * built.model.f_apply(res.a);
    EXPECT_LT(membership_residual(built.model, built.form, p, res.a).max(), 1e-6);
  }
}

TEST(OrbitSearch, IsotropyStartIsStationary) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto lag = legendre_to_hamiltonian(built.form);
  AlgebraVector a0 = AlgebraVector::Zero(8);
  a0(B) = 1.0;
  const auto res = orbit_extremum_search(built.model, lag, a0);
  EXPECT_EQ(res.residual, 0.0);
  EXPECT_TRUE(built.model.f_apply(res.a).isZero(0.0));
}

TEST(OrbitSearch, ReportsNoConvergence) {
  const auto built = builtins::su3_su2(1.0, 2.0);
  const auto lag = legendre_to_hamiltonian(built.form);
  AlgebraVector a0 = AlgebraVector::Zero(8);
  a0(E1) = 1.0;
  a0(Z) = 1.0;
  OrbitSearchOptions opts;
  opts.max_iter = 2;
  try {
    orbit_extremum_search(built.model, lag, a0, opts);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_EQ(e.best().size(), 8);
    EXPECT_GT(e.residual(), 1e-8);
  }
  EXPECT_THROW(orbit_extremum_search(built.model, lag, AlgebraVector::Zero(8)), InvalidInput);
}

}  // namespace
}  // namespace gokit
