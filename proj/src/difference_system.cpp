#include "mcda/difference_system.hpp"

#include <algorithm>
#include <limits>

#include "mcda/error.hpp"

namespace mcda {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

std::variant<std::vector<double>, NegativeCycle> solve_difference_system(
    std::size_t nodes, std::span<const DifferenceEdge> edges) {
  for (const auto& e : edges) {
    if (e.from >= nodes || e.to >= nodes) {
      throw Error(ErrorCode::InvalidInput, "difference edge references a missing node");
    }
  }
  std::vector<double> dist(nodes, 0.0);
  std::vector<std::size_t> pred(nodes, kNone);

  std::size_t relaxed = kNone;
  for (std::size_t round = 0; round <= nodes; ++round) {
    relaxed = kNone;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& e = edges[k];
      if (dist[e.from] + e.weight < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.weight;
        pred[e.to] = k;
        relaxed = e.to;
      }
    }
    if (relaxed == kNone) return dist;
  }

  // Still relaxing after |V| rounds (|V|+1 counting the source): walking the
  // predecessor chain |V| steps back lands on a node of a negative cycle.
  std::size_t v = relaxed;
  for (std::size_t i = 0; i < nodes; ++i) v = edges[pred[v]].from;

  NegativeCycle cycle{{}, 0.0};
  std::size_t u = v;
  do {
    const std::size_t k = pred[u];
    cycle.edges.push_back(k);
    cycle.total_weight += edges[k].weight;
    u = edges[k].from;
  } while (u != v);
  std::reverse(cycle.edges.begin(), cycle.edges.end());
  return cycle;
}

}  // namespace mcda
