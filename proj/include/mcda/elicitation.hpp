#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcda/difference_system.hpp"

namespace mcda {

/// Qualitative difference-of-satisfaction categories, ranked 0..6.
enum class Category {
  Indifferent = 0,
  VerySmall = 1,
  Small = 2,
  Mean = 3,
  Large = 4,
  VeryLarge = 5,
  Extreme = 6,
};

inline constexpr int rank(Category c) noexcept { return static_cast<int>(c); }
std::string_view label(Category c) noexcept;
/// Lowercase label ("very small", ...); throws InvalidInput on anything else.
Category parse_category(std::string_view text);
Category category_from_rank(int rank);

struct Bounds {
  double lo;
  double hi;
};

/// Unit-ladder semantics: rank c maps to [c, c+1] internal units, indifference
/// to [0, 0].
Bounds category_bounds(Category c) noexcept;

enum class BoundKind {
  Lower,           ///< v(better) - v(worse) >= lo
  Upper,           ///< v(better) - v(worse) <= hi
  WorstReference,  ///< v(level) >= v(zero level)
  BestReference,   ///< v(level) <= v(one level)
  Monotone,        ///< v(A) <= v(A u {i})
};

std::string_view to_string(BoundKind kind) noexcept;

/// v(nodes[to]) - v(nodes[from]) <= weight, traced to its source bound.
struct ConstraintEdge {
  std::size_t from;
  std::size_t to;
  double weight;
  std::string judgment_id;
  BoundKind kind;
};

struct ConstraintGraph {
  std::vector<std::string> nodes;
  std::vector<ConstraintEdge> edges;
};

/// Appends the two edges encoding lo <= v(better) - v(worse) <= hi.
void add_judgment_edges(ConstraintGraph& graph, std::size_t better, std::size_t worse,
                        Category category, const std::string& judgment_id);

struct CycleStep {
  std::string judgment_id;  ///< empty for implicit reference/monotone bounds
  BoundKind kind;
  std::string from;
  std::string to;
  double weight;
};

/// A cyclic chain of bounds that cannot hold together.
struct InconsistencyReport {
  std::vector<std::string> cycle;  ///< judgment ids in cycle order, each once
  double total_slack = 0.0;        ///< sum of the cycle's bounds, < 0
  std::vector<CycleStep> steps;
};

/// Potentials of a feasible graph, or the negative cycle explaining why none exist.
std::variant<std::vector<double>, InconsistencyReport> solve_graph(const ConstraintGraph& graph);

/// Largest violation of any edge by the given potentials (0 when all hold).
double max_edge_violation(const ConstraintGraph& graph, std::span<const double> potentials);

struct RatioViolation {
  std::size_t first;   ///< k(P, Q)
  std::size_t second;  ///< k(Q, R)
  std::size_t third;   ///< k(P, R)
  double product;
  double stated;
  double relative_error;
};

/// Multiplicativity k(P,Q) * k(Q,R) = k(P,R) over every chained triple present.
/// `pairs_of(r)` returns the (numerator pair, denominator pair) of a ratio.
template <typename Ratio, typename PairsOf>
std::vector<RatioViolation> find_ratio_violations(std::span<const Ratio> ratios, double tol,
                                                  PairsOf pairs_of) {
  using Pair = decltype(pairs_of(ratios[0]).first);
  std::multimap<std::pair<Pair, Pair>, std::size_t> by_ends;
  for (std::size_t i = 0; i < ratios.size(); ++i) by_ends.emplace(pairs_of(ratios[i]), i);

  std::vector<RatioViolation> out;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const auto [p, q] = pairs_of(ratios[i]);
    for (std::size_t j = 0; j < ratios.size(); ++j) {
      const auto [q2, r] = pairs_of(ratios[j]);
      if (!(q2 == q)) continue;
      auto [lo, hi] = by_ends.equal_range({p, r});
      for (auto it = lo; it != hi; ++it) {
        const std::size_t k = it->second;
        if (k == i || k == j) continue;
        const double product = ratios[i].k * ratios[j].k;
        const double stated = ratios[k].k;
        const double rel = std::abs(product - stated) / std::abs(product);
        if (!(rel <= tol)) out.push_back({i, j, k, product, stated, rel});
      }
    }
  }
  return out;
}

}  // namespace mcda
