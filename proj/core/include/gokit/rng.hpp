#pragma once

#include <cstdint>
#include <string_view>

#include "gokit/linalg.hpp"

namespace gokit {

/// Counter-based generator: draw i of stream s under seed k is a pure
/// function of (k, s, i), built from the SplitMix64 finaliser. Gaussian
/// draws use Box-Muller so the sequence does not depend on the standard
/// library's distribution implementations.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::string_view stream);

  std::uint64_t next_u64();
  /// Uniform on (0, 1).
  double uniform();
  double normal();
  Vector normal_vector(Eigen::Index n);
  /// Uniform on the unit sphere in R^n (n >= 1).
  Vector unit_vector(Eigen::Index n);

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gokit
