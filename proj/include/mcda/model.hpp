#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mcda/intra.hpp"
#include "mcda/setfn.hpp"

namespace mcda {

struct Act {
  std::string id;
  std::map<std::string, std::string> assignments;  ///< criterion id -> level id
};

/// Criteria, one attribute and utility scale per criterion, and a capacity.
/// Immutable once built.
class DecisionModel {
 public:
  DecisionModel(CriteriaSet criteria, std::vector<AttributeScale> attributes,
                std::vector<UtilityScale> scales, Capacity capacity);

  const CriteriaSet& criteria() const noexcept { return criteria_; }
  const std::vector<AttributeScale>& attributes() const noexcept { return attributes_; }
  const std::vector<UtilityScale>& scales() const noexcept { return scales_; }
  const Capacity& capacity() const noexcept { return capacity_; }

  /// Utility profile (u_1(x_1), ..., u_n(x_n)). Throws IncompleteAct, UnknownLevel.
  std::vector<double> profile(const Act& act) const;

  friend bool operator==(const DecisionModel&, const DecisionModel&) = default;

 private:
  CriteriaSet criteria_;
  std::vector<AttributeScale> attributes_;
  std::vector<UtilityScale> scales_;
  Capacity capacity_;
};

double evaluate(const DecisionModel& m, const Act& act);

struct RankedAct {
  Act act;
  double value;
};

/// Descending by value; equal values keep their input order.
std::vector<RankedAct> rank(const DecisionModel& m, std::span<const Act> acts);

/// The act (1_A, 0_-A): criteria in A at their one level, the rest at zero.
Act binary_act(const DecisionModel& m, Coalition a);

std::vector<double> shapley(const Capacity& mu);

/// Pairwise interaction index. Throws SameCriterion when i == j.
double interaction(const Capacity& mu, std::size_t i, std::size_t j);

}  // namespace mcda
