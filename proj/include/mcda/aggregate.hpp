#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mcda/setfn.hpp"

namespace mcda {

/// Discrete Choquet integral of x with respect to a (possibly signed) game.
///
/// Criteria are visited in ascending order of x, ties broken by criterion
/// index, and tied values are summed as one block:
///   C_g(x) = sum over blocks b of x_b * (g(T_b) - g(T_{b+1}))
/// where T_b is the set of criteria at or above block b. Grouping ties does
/// not change the value; it makes binary profiles evaluate to g(A) exactly.
double choquet(const Game& g, std::span<const double> x);

/// Coefficients c(x) with choquet(g, x) = sum_A c_A(x) g(A) for every game g.
std::vector<double> choquet_coefficients(std::size_t n, std::span<const double> x);

double weighted_sum(std::span<const double> weights, std::span<const double> x);

/// Aggregation family F_g indexed by a game.
struct Aggregator {
  std::string name;
  std::function<double(const Game&, std::span<const double>)> evaluate;

  double operator()(const Game& g, std::span<const double> x) const { return evaluate(g, x); }
};

namespace aggregators {

Aggregator choquet();
/// sum_i g({i}) x_i
Aggregator weighted_sum();
/// g(N) * mean(x); min, max and median are scaled the same way.
Aggregator mean();
Aggregator min();
Aggregator max();
Aggregator median();
/// sum_i x_i^2, independent of the game.
Aggregator sum_of_squares();
/// max_i min(x_(i), g(T_i)) over the ascending order: not linear in g.
Aggregator sugeno_like();

/// Looks up choquet | wsum | min | max | mean; throws InvalidInput otherwise.
Aggregator by_name(const std::string& name);

}  // namespace aggregators

struct OrderStatistic {
  double value;
  std::size_t k_sigma;  ///< 1-based position in the ascending order
};

/// For a {0,1}-valued capacity: with sigma ascending x, k_sigma is the largest
/// i such that mu01({sigma(i), ..., sigma(n)}) = 1 and the value is x_sigma(k).
OrderStatistic zero_one_order_statistic(const Capacity& mu01, std::span<const double> x);

}  // namespace mcda
