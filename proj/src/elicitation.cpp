#include "mcda/elicitation.hpp"

#include <algorithm>
#include <array>

#include "mcda/error.hpp"

namespace mcda {

namespace {
constexpr std::array<std::string_view, 7> kLabels = {
    "indifferent", "very small", "small", "mean", "large", "very large", "extreme"};
}

std::string_view label(Category c) noexcept { return kLabels[static_cast<std::size_t>(rank(c))]; }

Category parse_category(std::string_view text) {
  for (std::size_t r = 0; r < kLabels.size(); ++r) {
    if (kLabels[r] == text) return static_cast<Category>(r);
  }
  throw Error(ErrorCode::InvalidInput, "unknown category '" + std::string(text) + "'");
}

Category category_from_rank(int r) {
  if (r < 0 || r > 6) throw Error(ErrorCode::InvalidInput, "category rank must be in 0..6");
  return static_cast<Category>(r);
}

Bounds category_bounds(Category c) noexcept {
  const auto r = static_cast<double>(rank(c));
  if (r == 0.0) return {0.0, 0.0};
  return {r, r + 1.0};
}

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::WorstReference: return "worst_reference";
    case BoundKind::BestReference: return "best_reference";
    case BoundKind::Monotone: return "monotone";
  }
  return "?";
}

void add_judgment_edges(ConstraintGraph& graph, std::size_t better, std::size_t worse,
                        Category category, const std::string& judgment_id) {
  const Bounds b = category_bounds(category);
  // v(worse) - v(better) <= -lo
  graph.edges.push_back({better, worse, -b.lo, judgment_id, BoundKind::Lower});
  // v(better) - v(worse) <= hi
  graph.edges.push_back({worse, better, b.hi, judgment_id, BoundKind::Upper});
}

std::variant<std::vector<double>, InconsistencyReport> solve_graph(const ConstraintGraph& graph) {
  std::vector<DifferenceEdge> edges;
  edges.reserve(graph.edges.size());
  for (const auto& e : graph.edges) edges.push_back({e.from, e.to, e.weight});

  auto result = solve_difference_system(graph.nodes.size(), edges);
  if (auto* potentials = std::get_if<std::vector<double>>(&result)) return std::move(*potentials);

  const auto& cycle = std::get<NegativeCycle>(result);
  InconsistencyReport report;
  report.total_slack = cycle.total_weight;
  for (std::size_t k : cycle.edges) {
    const auto& e = graph.edges[k];
    report.steps.push_back({e.judgment_id, e.kind, graph.nodes[e.from], graph.nodes[e.to], e.weight});
    if (!e.judgment_id.empty() &&
        std::find(report.cycle.begin(), report.cycle.end(), e.judgment_id) == report.cycle.end()) {
      report.cycle.push_back(e.judgment_id);
    }
  }
  return report;
}

double max_edge_violation(const ConstraintGraph& graph, std::span<const double> potentials) {
  double worst = 0.0;
  for (const auto& e : graph.edges) {
    worst = std::max(worst, potentials[e.to] - potentials[e.from] - e.weight);
  }
  return worst;
}

}  // namespace mcda
