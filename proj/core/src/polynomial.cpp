#include "gokit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gokit/error.hpp"

namespace gokit {

namespace {

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Polynomial::Polynomial(int num_vars, std::vector<Monomial> terms) : num_vars_(num_vars) {
  if (num_vars < 0) throw InvalidInput("polynomial variable count must be >= 0");
  std::map<std::vector<int>, double> merged;
  for (auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != num_vars) {
      throw InvalidInput("monomial has " + std::to_string(t.exponents.size()) +
                         " exponents, expected " + std::to_string(num_vars));
    }
    for (int e : t.exponents)
      if (e < 0) throw InvalidInput("monomial exponents must be non-negative");
    if (!std::isfinite(t.coeff)) throw InvalidInput("monomial coefficient is not finite");
    merged[t.exponents] += t.coeff;
  }
  for (auto& [exps, coeff] : merged)
    if (coeff != 0.0) terms_.push_back({exps, coeff});
}

Polynomial Polynomial::constant(int num_vars, double value) {
  return Polynomial(num_vars, {{std::vector<int>(num_vars, 0), value}});
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw InvalidInput("variable index out of range");
  std::vector<int> e(num_vars, 0);
  e[index] = 1;
  return Polynomial(num_vars, {{e, 1.0}});
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int e : t.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::check(const Vector& x) const {
  if (x.size() != num_vars_) {
    throw InvalidInput("polynomial evaluated at a point of length " +
                       std::to_string(x.size()) + ", expected " +
                       std::to_string(num_vars_));
  }
}

double Polynomial::value(const Vector& x) const {
  check(x);
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff;
    for (int i = 0; i < num_vars_; ++i)
      if (t.exponents[i] != 0) v *= ipow(x(i), t.exponents[i]);
    sum += v;
  }
  return sum;
}

Vector Polynomial::gradient(const Vector& x) const {
  check(x);
  Vector g = Vector::Zero(num_vars_);
  for (const auto& t : terms_) {
    for (int d = 0; d < num_vars_; ++d) {
      const int ed = t.exponents[d];
      if (ed == 0) continue;
      double v = t.coeff * ed;
      for (int i = 0; i < num_vars_; ++i) {
        const int e = i == d ? ed - 1 : t.exponents[i];
        if (e != 0) v *= ipow(x(i), e);
      }
      g(d) += v;
    }
  }
  return g;
}

Polynomial Polynomial::restrict_to(std::span<const int> keep) const {
  std::vector<bool> kept(num_vars_, false);
  for (int k : keep) {
    if (k < 0 || k >= num_vars_) throw InvalidInput("restriction index out of range");
    kept[k] = true;
  }
  const int nk = static_cast<int>(keep.size());
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    bool vanishes = false;
    for (int i = 0; i < num_vars_; ++i)
      if (!kept[i] && t.exponents[i] != 0) vanishes = true;
    if (vanishes) continue;
    std::vector<int> e(nk);
    for (int r = 0; r < nk; ++r) e[r] = t.exponents[keep[r]];
    out.push_back({std::move(e), t.coeff});
  }
  return Polynomial(nk, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) throw InvalidInput("polynomial variable count mismatch");
  std::vector<Monomial> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return Polynomial(num_vars_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other * -1.0;
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<Monomial> out = terms_;
  for (auto& t : out) t.coeff *= s;
  return Polynomial(num_vars_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (other.num_vars_ != num_vars_) throw InvalidInput("polynomial variable count mismatch");
  std::vector<Monomial> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      std::vector<int> e(num_vars_);
      for (int i = 0; i < num_vars_; ++i) e[i] = a.exponents[i] + b.exponents[i];
      out.push_back({std::move(e), a.coeff * b.coeff});
    }
  return Polynomial(num_vars_, std::move(out));
}

}  // namespace gokit
