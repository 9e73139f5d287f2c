#include "mcda/intra.hpp"

#include <algorithm>
#include <set>

#include "mcda/error.hpp"

namespace mcda {

AttributeScale::AttributeScale(std::string criterion_id, std::vector<std::string> levels,
                               std::string zero_level, std::string one_level)
    : criterion_id_(std::move(criterion_id)),
      levels_(std::move(levels)),
      zero_level_(std::move(zero_level)),
      one_level_(std::move(one_level)) {
  if (criterion_id_.empty()) throw Error(ErrorCode::InvalidInput, "empty criterion id");
  std::set<std::string> seen;
  for (const auto& l : levels_) {
    if (l.empty()) throw Error(ErrorCode::InvalidInput, "empty level id in '" + criterion_id_ + "'");
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::InvalidInput,
                  "duplicate level '" + l + "' in criterion '" + criterion_id_ + "'");
    }
  }
  if (zero_level_ == one_level_) {
    throw Error(ErrorCode::InvalidInput, "zero and one levels coincide in '" + criterion_id_ + "'");
  }
  if (!seen.count(zero_level_) || !seen.count(one_level_)) {
    throw Error(ErrorCode::UnknownLevel,
                "reference levels of '" + criterion_id_ + "' must be among its levels");
  }
}

std::size_t AttributeScale::index_of(std::string_view level) const {
  auto it = std::find(levels_.begin(), levels_.end(), level);
  if (it == levels_.end()) {
    throw Error(ErrorCode::UnknownLevel,
                "criterion '" + criterion_id_ + "' has no level '" + std::string(level) + "'");
  }
  return static_cast<std::size_t>(it - levels_.begin());
}

bool AttributeScale::has_level(std::string_view level) const {
  return std::find(levels_.begin(), levels_.end(), level) != levels_.end();
}

UtilityScale::UtilityScale(const AttributeScale& scale, std::map<std::string, double> values)
    : criterion_id_(scale.criterion_id()), values_(std::move(values)) {
  constexpr double kTol = 1e-9;
  for (const auto& level : scale.levels()) {
    if (!values_.count(level)) {
      throw Error(ErrorCode::InvalidInput,
                  "scale for '" + criterion_id_ + "' has no value for level '" + level + "'");
    }
  }
  for (const auto& [level, v] : values_) {
    if (!scale.has_level(level)) {
      throw Error(ErrorCode::UnknownLevel,
                  "criterion '" + criterion_id_ + "' has no level '" + level + "'");
    }
    if (!(v >= -kTol && v <= 1.0 + kTol)) {
      throw Error(ErrorCode::OutOfRange,
                  "utility of '" + level + "' is outside [0,1] in '" + criterion_id_ + "'");
    }
  }
  double& zero = values_[scale.zero_level()];
  double& one = values_[scale.one_level()];
  if (std::abs(zero) > kTol || std::abs(one - 1.0) > kTol) {
    throw Error(ErrorCode::NotNormalized,
                "utility of the reference levels must be 0 and 1 in '" + criterion_id_ + "'");
  }
  zero = 0.0;
  one = 1.0;
}

double UtilityScale::at(std::string_view level) const {
  auto it = values_.find(std::string(level));
  if (it == values_.end()) {
    throw Error(ErrorCode::UnknownLevel,
                "criterion '" + criterion_id_ + "' has no level '" + std::string(level) + "'");
  }
  return it->second;
}

std::vector<IntraItem> make_intra_items(const AttributeScale& scale, ElicitationContext ctx) {
  std::vector<IntraItem> items;
  items.reserve(scale.levels().size());
  for (const auto& level : scale.levels()) items.push_back({scale.criterion_id(), level, ctx});
  return items;
}

ConstraintGraph build_constraint_graph(const AttributeScale& scale,
                                       std::span<const DifferenceJudgment> judgments) {
  ConstraintGraph graph;
  graph.nodes = scale.levels();
  std::set<std::string> ids;
  for (const auto& j : judgments) {
    if (!ids.insert(j.id).second) {
      throw Error(ErrorCode::InvalidInput, "repeated judgment id '" + j.id + "'");
    }
    const auto better = scale.index_of(j.better);
    const auto worse = scale.index_of(j.worse);
    if (better == worse && j.category != Category::Indifferent) {
      throw Error(ErrorCode::InvalidInput,
                  "judgment '" + j.id + "' prefers level '" + j.better + "' to itself");
    }
    add_judgment_edges(graph, better, worse, j.category, j.id);
  }
  return graph;
}

std::variant<ScaleSolution, InconsistencyReport> solve_scale(const ConstraintGraph& graph,
                                                             const AttributeScale& scale) {
  if (graph.nodes != scale.levels()) {
    throw Error(ErrorCode::InvalidInput, "graph was not built over this scale's levels");
  }
  const std::size_t zero = scale.zero_index();
  const std::size_t one = scale.one_index();

  ConstraintGraph full = graph;
  for (std::size_t i = 0; i < scale.levels().size(); ++i) {
    if (i != zero) full.edges.push_back({i, zero, 0.0, {}, BoundKind::WorstReference});
    if (i != one) full.edges.push_back({one, i, 0.0, {}, BoundKind::BestReference});
  }

  auto solved = solve_graph(full);
  if (auto* report = std::get_if<InconsistencyReport>(&solved)) return std::move(*report);
  auto potentials = std::get<std::vector<double>>(std::move(solved));

  const double unit = potentials[one] - potentials[zero];
  if (!(unit > 0.0)) {
    throw Error(ErrorCode::DegenerateEndpoints,
                "judgments on '" + scale.criterion_id() +
                    "' do not force the one level above the zero level");
  }
  std::map<std::string, double> u;
  for (std::size_t i = 0; i < scale.levels().size(); ++i) {
    u[scale.levels()[i]] = (potentials[i] - potentials[zero]) / unit;
  }
  return ScaleSolution{UtilityScale(scale, std::move(u)), std::move(potentials), unit};
}

UtilityScale utilities_from_ratios(const AttributeScale& scale,
                                   std::span<const RatioJudgment> ratios) {
  std::map<std::string, double> u;
  for (const auto& level : scale.levels()) {
    if (level == scale.zero_level()) {
      u[level] = 0.0;
      continue;
    }
    if (level == scale.one_level()) {
      u[level] = 1.0;
      continue;
    }
    auto it = std::find_if(ratios.begin(), ratios.end(), [&](const RatioJudgment& r) {
      return r.x == level && r.y == scale.zero_level() && r.w == scale.one_level() &&
             r.z == scale.zero_level();
    });
    if (it == ratios.end()) {
      throw Error(ErrorCode::MissingRatio, "no ratio k(" + level + ", zero, one, zero) for '" +
                                               scale.criterion_id() + "'");
    }
    if (!(it->k >= 0.0 && it->k <= 1.0)) {
      throw Error(ErrorCode::OutOfRange,
                  "ratio for level '" + level + "' must lie in [0,1], got " + std::to_string(it->k));
    }
    u[level] = it->k;
  }
  return UtilityScale(scale, std::move(u));
}

std::vector<RatioViolation> check_ratio_consistency(std::span<const RatioJudgment> ratios,
                                                    double tol) {
  return find_ratio_violations(ratios, tol, [](const RatioJudgment& r) {
    return std::pair{std::pair{r.x, r.y}, std::pair{r.w, r.z}};
  });
}

}  // namespace mcda
