#include "mcda/random.hpp"

#include <algorithm>

namespace mcda {

Game random_game(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (std::size_t s = 1; s < v.size(); ++s) v[s] = rng.uniform(lo, hi);
  return Game(n, std::move(v));
}

Capacity random_capacity(std::size_t n, Rng& rng) {
  std::vector<double> v(std::size_t{1} << n, 0.0);
  // Increasing bitmask visits every subset before its supersets.
  for (std::uint32_t s = 1; s < v.size(); ++s) {
    double value = rng.uniform();
    for (std::size_t i = 0; i < n; ++i) {
      Coalition c{s};
      if (c.contains(i)) value = std::max(value, v[c.without(i).bits]);
    }
    v[s] = value;
  }
  const double top = v.back();
  if (top > 0.0) {
    for (auto& x : v) x /= top;
  }
  v.back() = 1.0;
  return make_capacity(n, v);
}

std::vector<double> random_vector(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> x(n);
  for (auto& xi : x) xi = rng.uniform(lo, hi);
  return x;
}

}  // namespace mcda
