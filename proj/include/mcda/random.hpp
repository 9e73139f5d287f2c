#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mcda/setfn.hpp"

namespace mcda {

/// Seeded generator with platform-independent real sampling (mt19937_64 bits
/// mapped to [0,1) with 53-bit resolution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Game with values uniform in [lo, hi] on every non-empty coalition.
Game random_game(std::size_t n, Rng& rng, double lo = -1.0, double hi = 1.0);

/// Monotone normalized capacity: raw uniform draws, lifted to the running
/// maximum over covered subsets, then divided by the top value.
Capacity random_capacity(std::size_t n, Rng& rng);

std::vector<double> random_vector(std::size_t n, Rng& rng, double lo = 0.0, double hi = 1.0);

}  // namespace mcda
