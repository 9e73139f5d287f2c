#pragma once

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mcda/elicitation.hpp"

namespace mcda {

/// Finite attribute with its two absolute reference levels.
class AttributeScale {
 public:
  AttributeScale(std::string criterion_id, std::vector<std::string> levels,
                 std::string zero_level, std::string one_level);

  const std::string& criterion_id() const noexcept { return criterion_id_; }
  const std::vector<std::string>& levels() const noexcept { return levels_; }
  const std::string& zero_level() const noexcept { return zero_level_; }
  const std::string& one_level() const noexcept { return one_level_; }
  std::size_t zero_index() const { return index_of(zero_level_); }
  std::size_t one_index() const { return index_of(one_level_); }
  /// Throws UnknownLevel.
  std::size_t index_of(std::string_view level) const;
  bool has_level(std::string_view level) const;

  friend bool operator==(const AttributeScale&, const AttributeScale&) = default;

 private:
  std::string criterion_id_;
  std::vector<std::string> levels_;
  std::string zero_level_;
  std::string one_level_;
};

struct DifferenceJudgment {
  std::string id;
  std::string better;
  std::string worse;
  Category category;

  friend bool operator==(const DifferenceJudgment&, const DifferenceJudgment&) = default;
};

/// (u(x) - u(y)) / (u(w) - u(z)) = k.
struct RatioJudgment {
  std::string x;
  std::string y;
  std::string w;
  std::string z;
  double k;
};

/// u_i: level -> [0,1] with u(zero) = 0 and u(one) = 1.
class UtilityScale {
 public:
  /// Validates endpoints and range within 1e-9; endpoints are stored exactly.
  UtilityScale(const AttributeScale& scale, std::map<std::string, double> values);

  const std::string& criterion_id() const noexcept { return criterion_id_; }
  const std::map<std::string, double>& values() const noexcept { return values_; }
  double at(std::string_view level) const;

  friend bool operator==(const UtilityScale&, const UtilityScale&) = default;

 private:
  std::string criterion_id_;
  std::map<std::string, double> values_;
};

enum class ElicitationContext { ZeroContext, OneContext };

/// The act (level, 0_-i) in zero context or (level, 1_-i) in one context.
struct IntraItem {
  std::string criterion_id;
  std::string level;
  ElicitationContext context;
};

std::vector<IntraItem> make_intra_items(const AttributeScale& scale, ElicitationContext ctx);

/// Nodes are the scale's levels in order; each judgment contributes its lower
/// and upper bound edge. Throws UnknownLevel, or InvalidInput for a strict
/// judgment comparing a level with itself or a repeated judgment id.
ConstraintGraph build_constraint_graph(const AttributeScale& scale,
                                       std::span<const DifferenceJudgment> judgments);

struct ScaleSolution {
  UtilityScale scale;
  std::vector<double> potentials;  ///< per level, in internal units
  double unit;                     ///< v(one) - v(zero)
};

/// Solves the judgments' difference constraints together with the reference
/// bounds v(zero) <= v(level) <= v(one) and normalizes the shortest-path
/// potentials affinely onto [0,1]. Throws DegenerateEndpoints when nothing
/// forces the one level strictly above the zero level.
std::variant<ScaleSolution, InconsistencyReport> solve_scale(const ConstraintGraph& graph,
                                                             const AttributeScale& scale);

/// u(level) = k(level, zero, one, zero) for every level other than the endpoints.
/// Throws MissingRatio, or OutOfRange for k outside [0,1].
UtilityScale utilities_from_ratios(const AttributeScale& scale,
                                   std::span<const RatioJudgment> ratios);

std::vector<RatioViolation> check_ratio_consistency(std::span<const RatioJudgment> ratios,
                                                    double tol);

}  // namespace mcda
