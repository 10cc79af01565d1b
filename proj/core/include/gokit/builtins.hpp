#pragma once

#include "gokit/homspace.hpp"
#include "gokit/liealg.hpp"
#include "gokit/polynomial.hpp"

namespace gokit::builtins {

/// Basis positions of su(3) in the orthonormal basis
/// A' = A/sqrt3, B' = B/sqrt3, C' = C/sqrt3, E1, E2, E3, E4, Z.
namespace su3_index {
inline constexpr int A = 0;
inline constexpr int B = 1;
inline constexpr int C = 2;
inline constexpr int E1 = 3;
inline constexpr int E2 = 4;
inline constexpr int E3 = 5;
inline constexpr int E4 = 6;
inline constexpr int Z = 7;
}  // namespace su3_index

/// su(3) in the basis above. The quadratic Casimir is the identity form.
StructureTensor su3();

/// Three-dimensional Heisenberg algebra, [X, Y] = Z.
StructureTensor heisenberg();

/// Quadratic Casimir a'^2 + b'^2 + c'^2 + |e|^2 + z^2 on su(3)*.
Polynomial su3_y1();

/// Cubic Casimir sqrt3 s3 + z (s2 - 2 s1) + (2/3) z^3 on su(3)*, with
/// s1 = a'^2 + b'^2 + c'^2, s2 = |e|^2,
/// s3 = a'(e1^2 + e2^2 - e3^2 - e4^2) + 2b'(e1 e4 - e2 e3) - 2c'(e1 e3 + e2 e4).
Polynomial su3_y2();

/// SU(3)/SU(2) with k = span(A', B', C') and m = span(E1..E4, Z), and the
/// invariant Hamiltonian alpha |e|^2 + beta z^2 at the origin, i.e. the
/// quadratic form with S = 2 diag(alpha, alpha, alpha, alpha, beta).
struct Su3Su2 {
  HomogeneousModel model;
  EnergyForm form;
  /// Set when alpha or beta is not positive (pseudo-Riemannian or degenerate).
  bool indefinite = false;
};

Su3Su2 su3_su2(double alpha, double beta);

}  // namespace gokit::builtins
