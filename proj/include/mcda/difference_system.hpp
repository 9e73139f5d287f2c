#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace mcda {

/// Constraint v(to) - v(from) <= weight.
struct DifferenceEdge {
  std::size_t from;
  std::size_t to;
  double weight;
};

struct NegativeCycle {
  std::vector<std::size_t> edges;  ///< edge indices in traversal order
  double total_weight;             ///< < 0
};

/// Bellman-Ford from a virtual source joined to every node with weight 0.
/// Returns the shortest-path potentials (a feasible point, all <= 0) or one
/// negative cycle when the system is infeasible. Deterministic in edge order.
std::variant<std::vector<double>, NegativeCycle> solve_difference_system(
    std::size_t nodes, std::span<const DifferenceEdge> edges);

}  // namespace mcda
