#include "mcda/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mcda {

namespace {

void require_dimension(std::size_t n, std::span<const double> x) {
  if (x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "profile has " + std::to_string(x.size()) + " entries, expected " +
                    std::to_string(n));
  }
}

std::vector<std::size_t> ascending_order(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

// Calls visit(value, tail, next_tail) for every block of tied values.
template <typename Visit>
void for_each_block(std::size_t n, std::span<const double> x, Visit&& visit) {
  const auto order = ascending_order(x);
  Coalition tail = Coalition::full(n);
  std::size_t i = 0;
  while (i < n) {
    const double value = x[order[i]];
    Coalition next = tail;
    std::size_t j = i;
    while (j < n && x[order[j]] == value) next = next.without(order[j++]);
    visit(value, tail, next);
    tail = next;
    i = j;
  }
}

}  // namespace

double choquet(const Game& g, std::span<const double> x) {
  require_dimension(g.n(), x);
  double acc = 0.0;
  for_each_block(g.n(), x, [&](double value, Coalition tail, Coalition next) {
    acc += value * (g[tail] - g[next]);
  });
  return acc;
}

std::vector<double> choquet_coefficients(std::size_t n, std::span<const double> x) {
  require_dimension(n, x);
  std::vector<double> c(std::size_t{1} << n, 0.0);
  for_each_block(n, x, [&](double value, Coalition tail, Coalition next) {
    c[tail.bits] += value;
    c[next.bits] -= value;
  });
  c[0] = 0.0;
  return c;
}

double weighted_sum(std::span<const double> weights, std::span<const double> x) {
  if (weights.size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "weights and profile differ in length");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += weights[i] * x[i];
  return acc;
}

namespace aggregators {

Aggregator choquet() {
  return {"choquet", [](const Game& g, std::span<const double> x) { return mcda::choquet(g, x); }};
}

Aggregator weighted_sum() {
  return {"wsum", [](const Game& g, std::span<const double> x) {
            require_dimension(g.n(), x);
            double acc = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) acc += g[Coalition::single(i)] * x[i];
            return acc;
          }};
}

Aggregator mean() {
  return {"mean", [](const Game& g, std::span<const double> x) {
            require_dimension(g.n(), x);
            const double m = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
            return g[Coalition::full(g.n())] * m;
          }};
}

Aggregator min() {
  return {"min", [](const Game& g, std::span<const double> x) {
            require_dimension(g.n(), x);
            return g[Coalition::full(g.n())] * *std::min_element(x.begin(), x.end());
          }};
}

Aggregator max() {
  return {"max", [](const Game& g, std::span<const double> x) {
            require_dimension(g.n(), x);
            return g[Coalition::full(g.n())] * *std::max_element(x.begin(), x.end());
          }};
}

Aggregator median() {
  return {"median", [](const Game& g, std::span<const double> x) {
            require_dimension(g.n(), x);
            std::vector<double> s(x.begin(), x.end());
            std::sort(s.begin(), s.end());
            const std::size_t n = s.size();
            const double med = n % 2 == 1 ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
            return g[Coalition::full(g.n())] * med;
          }};
}

Aggregator sum_of_squares() {
  return {"sum_of_squares", [](const Game& g, std::span<const double> x) {
            require_dimension(g.n(), x);
            double acc = 0.0;
            for (double v : x) acc += v * v;
            return acc;
          }};
}

Aggregator sugeno_like() {
  return {"sugeno_like", [](const Game& g, std::span<const double> x) {
            require_dimension(g.n(), x);
            double best = -INFINITY;
            for_each_block(g.n(), x, [&](double value, Coalition tail, Coalition) {
              best = std::max(best, std::min(value, g[tail]));
            });
            return best;
          }};
}

Aggregator by_name(const std::string& name) {
  if (name == "choquet") return choquet();
  if (name == "wsum") return weighted_sum();
  if (name == "min") return min();
  if (name == "max") return max();
  if (name == "mean") return mean();
  throw Error(ErrorCode::InvalidInput,
              "unknown aggregator '" + name + "' (expected choquet, wsum, min, max or mean)");
}

}  // namespace aggregators

OrderStatistic zero_one_order_statistic(const Capacity& mu01, std::span<const double> x) {
  require_dimension(mu01.n(), x);
  for (double v : mu01.game().values()) {
    if (v != 0.0 && v != 1.0) {
      throw Error(ErrorCode::NotZeroOne, "capacity takes values other than 0 and 1");
    }
  }
  const auto order = ascending_order(x);
  Coalition tail = Coalition::full(mu01.n());
  std::size_t k = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (mu01[tail] == 1.0) k = i + 1;
    tail = tail.without(order[i]);
  }
  // mu01(N) = 1, so k >= 1.
  return {x[order[k - 1]], k};
}

}  // namespace mcda
