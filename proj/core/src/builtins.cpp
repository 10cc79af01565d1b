#include "gokit/builtins.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace gokit::builtins {

namespace {

// su(3) bracket table in the unnormalised basis A, B, C, E1..E4, Z.
struct RawEntry {
  int i, j, k;
  double value;
};

std::vector<RawEntry> su3_raw_table() {
  using namespace su3_index;
  constexpr double third = 1.0 / 3.0;
  return {
      {A, B, C, 2.0}, {B, C, A, 2.0}, {C, A, B, 2.0},
      {A, E1, E2, -1.0}, {A, E2, E1, 1.0}, {A, E3, E4, 1.0}, {A, E4, E3, -1.0},
      {B, E1, E3, 1.0}, {B, E2, E4, 1.0}, {B, E3, E1, -1.0}, {B, E4, E2, -1.0},
      {C, E1, E4, 1.0}, {C, E2, E3, -1.0}, {C, E3, E2, 1.0}, {C, E4, E1, -1.0},
      {Z, E1, E2, 1.0}, {Z, E2, E1, -1.0}, {Z, E3, E4, 1.0}, {Z, E4, E3, -1.0},
      {E1, E2, Z, 1.0}, {E1, E2, A, -third},
      {E1, E3, B, third},
      {E1, E4, C, third},
      {E2, E3, C, -third},
      {E2, E4, B, third},
      {E3, E4, Z, 1.0}, {E3, E4, A, third},
  };
}

std::vector<int> exps(std::initializer_list<std::pair<int, int>> powers) {
  std::vector<int> e(8, 0);
  for (auto [var, pw] : powers) e[var] += pw;
  return e;
}

}  // namespace

StructureTensor su3() {
  // Rescaling X' = s_X X gives c'^k_ij = s_i s_j c^k_ij / s_k.
  const double inv_sqrt3 = 1.0 / std::numbers::sqrt3;
  auto scale = [&](int idx) { return idx <= su3_index::C ? inv_sqrt3 : 1.0; };
  std::vector<BracketEntry> entries;
  for (const auto& e : su3_raw_table()) {
    entries.push_back({e.i, e.j, e.k, e.value * scale(e.i) * scale(e.j) / scale(e.k)});
  }
  return StructureTensor(8, entries, {"A'", "B'", "C'", "E1", "E2", "E3", "E4", "Z"});
}

StructureTensor heisenberg() {
  return StructureTensor(3, {{0, 1, 2, 1.0}}, {"X", "Y", "Z"});
}

Polynomial su3_y1() {
  std::vector<Monomial> terms;
  for (int i = 0; i < 8; ++i) terms.push_back({exps({{i, 2}}), 1.0});
  return Polynomial(8, std::move(terms));
}

Polynomial su3_y2() {
  using namespace su3_index;
  const double r3 = std::numbers::sqrt3;
  std::vector<Monomial> t;
  // sqrt3 * s3
  t.push_back({exps({{A, 1}, {E1, 2}}), r3});
  t.push_back({exps({{A, 1}, {E2, 2}}), r3});
  t.push_back({exps({{A, 1}, {E3, 2}}), -r3});
  t.push_back({exps({{A, 1}, {E4, 2}}), -r3});
  t.push_back({exps({{B, 1}, {E1, 1}, {E4, 1}}), 2.0 * r3});
  t.push_back({exps({{B, 1}, {E2, 1}, {E3, 1}}), -2.0 * r3});
  t.push_back({exps({{C, 1}, {E1, 1}, {E3, 1}}), -2.0 * r3});
  t.push_back({exps({{C, 1}, {E2, 1}, {E4, 1}}), -2.0 * r3});
  // z * s2
  for (int e : {E1, E2, E3, E4}) t.push_back({exps({{Z, 1}, {e, 2}}), 1.0});
  // -2 z * s1
  for (int k : {A, B, C}) t.push_back({exps({{Z, 1}, {k, 2}}), -2.0});
  // (2/3) z^3
  t.push_back({exps({{Z, 3}}), 2.0 / 3.0});
  return Polynomial(8, std::move(t));
}

Su3Su2 su3_su2(double alpha, double beta) {
  using namespace su3_index;
  HomogeneousModel model(su3(), {A, B, C}, {E1, E2, E3, E4, Z});
  Vector diag(5);
  diag << alpha, alpha, alpha, alpha, beta;
  Matrix s = (2.0 * diag).asDiagonal();
  return Su3Su2{std::move(model), EnergyForm::quadratic(std::move(s)),
                !(alpha > 0.0 && beta > 0.0)};
}

}  // namespace gokit::builtins
