#include "mcda/inter.hpp"

#include <algorithm>
#include <set>

#include "mcda/error.hpp"

namespace mcda {

namespace {

void require_inter_size(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "need at least one criterion");
  if (n > kMaxInterCriteria) {
    throw Error(ErrorCode::TooLarge, "coalition elicitation is limited to n <= 6 (got " +
                                         std::to_string(n) + ")");
  }
}

}  // namespace

std::vector<Coalition> make_inter_items(std::size_t n) {
  require_inter_size(n);
  std::vector<Coalition> items;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) items.push_back(Coalition{s});
  return items;
}

Game normalize_potentials(std::size_t n, std::span<const double> potentials) {
  const std::size_t size = std::size_t{1} << n;
  if (potentials.size() != size) {
    throw Error(ErrorCode::DimensionMismatch, "need one potential per coalition");
  }
  const double base = potentials.front();
  const double unit = potentials.back() - base;
  if (!(unit > 0.0)) {
    throw Error(ErrorCode::DegenerateEndpoints,
                "judgments do not force the all-one act above the all-zero act");
  }
  std::vector<double> v(size);
  for (std::size_t s = 0; s < size; ++s) v[s] = (potentials[s] - base) / unit;
  v.front() = 0.0;
  v.back() = 1.0;
  return Game(n, std::move(v));
}

ConstraintGraph build_coalition_graph(const CriteriaSet& criteria,
                                      std::span<const CoalitionJudgment> judgments,
                                      const InterOptions& options) {
  const std::size_t n = criteria.size();
  require_inter_size(n);
  const std::size_t size = std::size_t{1} << n;
  ConstraintGraph graph;
  for (std::uint32_t s = 0; s < size; ++s) graph.nodes.push_back(criteria.key(Coalition{s}));

  std::set<std::string> ids;
  for (const auto& j : judgments) {
    if (!ids.insert(j.id).second) {
      throw Error(ErrorCode::InvalidInput, "repeated judgment id '" + j.id + "'");
    }
    if (j.better.index() >= size || j.worse.index() >= size) {
      throw Error(ErrorCode::InvalidInput, "judgment '" + j.id + "' uses an unknown coalition");
    }
    if (j.better == j.worse && j.category != Category::Indifferent) {
      throw Error(ErrorCode::InvalidInput,
                  "judgment '" + j.id + "' prefers a coalition to itself");
    }
    add_judgment_edges(graph, j.better.index(), j.worse.index(), j.category, j.id);
  }
  if (options.enforce_monotone) {
    for (std::uint32_t s = 0; s < size; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        const Coalition a{s};
        if (a.contains(i)) continue;
        graph.edges.push_back({a.with(i).index(), a.index(), 0.0, {}, BoundKind::Monotone});
      }
    }
  }
  return graph;
}

CapacityOutcome solve_capacity_scale(const CriteriaSet& criteria,
                                     std::span<const CoalitionJudgment> judgments,
                                     const InterOptions& options) {
  const auto graph = build_coalition_graph(criteria, judgments, options);
  auto solved = solve_graph(graph);
  if (auto* report = std::get_if<InconsistencyReport>(&solved)) return std::move(*report);
  auto potentials = std::get<std::vector<double>>(std::move(solved));

  Game g = normalize_potentials(criteria.size(), potentials);
  auto bad = monotonicity_violations(g);
  if (!bad.empty()) return MonotonicityViolation{std::move(g), std::move(bad)};
  const double unit = potentials.back() - potentials.front();
  return CapacitySolution{make_capacity(g), std::move(potentials), unit};
}

Capacity capacity_from_ratios(std::size_t n, std::span<const CoalitionRatio> ratios) {
  require_inter_size(n);
  const Coalition full = Coalition::full(n);
  std::vector<double> v(std::size_t{1} << n, 0.0);
  v.back() = 1.0;
  for (std::uint32_t s = 1; s + 1 < v.size(); ++s) {
    const Coalition a{s};
    auto it = std::find_if(ratios.begin(), ratios.end(), [&](const CoalitionRatio& r) {
      return r.a == a && r.b.is_empty() && r.c == full && r.d.is_empty();
    });
    if (it == ratios.end()) {
      throw Error(ErrorCode::MissingRatio,
                  "no ratio k(A, empty, N, empty) for coalition bitmask " + std::to_string(s));
    }
    v[s] = it->k;
  }
  return make_capacity(n, v);
}

std::vector<RatioViolation> check_inter_d(std::span<const CoalitionRatio> ratios, double tol) {
  return find_ratio_violations(ratios, tol, [](const CoalitionRatio& r) {
    return std::pair{std::pair{r.a, r.b}, std::pair{r.c, r.d}};
  });
}

}  // namespace mcda
