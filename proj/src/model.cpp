#include "mcda/model.hpp"

#include <algorithm>
#include <numeric>

#include "mcda/aggregate.hpp"

namespace mcda {

namespace {

std::vector<double> factorials(std::size_t n) {
  std::vector<double> f(n + 1, 1.0);
  for (std::size_t k = 1; k <= n; ++k) f[k] = f[k - 1] * static_cast<double>(k);
  return f;
}

}  // namespace

DecisionModel::DecisionModel(CriteriaSet criteria, std::vector<AttributeScale> attributes,
                             std::vector<UtilityScale> scales, Capacity capacity)
    : criteria_(std::move(criteria)),
      attributes_(std::move(attributes)),
      scales_(std::move(scales)),
      capacity_(std::move(capacity)) {
  const std::size_t n = criteria_.size();
  if (attributes_.size() != n || scales_.size() != n || capacity_.n() != n) {
    throw Error(ErrorCode::DimensionMismatch, "model parts disagree on the number of criteria");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (attributes_[i].criterion_id() != criteria_.id(i) ||
        scales_[i].criterion_id() != criteria_.id(i)) {
      throw Error(ErrorCode::DimensionMismatch,
                  "scales must follow criteria order (expected '" + criteria_.id(i) + "')");
    }
    // Re-validate the scale against its attribute.
    UtilityScale(attributes_[i], scales_[i].values());
  }
}

std::vector<double> DecisionModel::profile(const Act& act) const {
  std::vector<double> u(criteria_.size());
  for (const auto& [crit, level] : act.assignments) {
    criteria_.index_of(crit);  // throws on unknown criterion
  }
  for (std::size_t i = 0; i < criteria_.size(); ++i) {
    auto it = act.assignments.find(criteria_.id(i));
    if (it == act.assignments.end()) {
      throw Error(ErrorCode::IncompleteAct,
                  "act '" + act.id + "' has no level for criterion '" + criteria_.id(i) + "'");
    }
    attributes_[i].index_of(it->second);
    u[i] = scales_[i].at(it->second);
  }
  return u;
}

double evaluate(const DecisionModel& m, const Act& act) {
  return choquet(m.capacity(), m.profile(act));
}

std::vector<RankedAct> rank(const DecisionModel& m, std::span<const Act> acts) {
  std::vector<RankedAct> out;
  out.reserve(acts.size());
  for (const auto& a : acts) out.push_back({a, evaluate(m, a)});
  std::stable_sort(out.begin(), out.end(),
                   [](const RankedAct& l, const RankedAct& r) { return l.value > r.value; });
  return out;
}

Act binary_act(const DecisionModel& m, Coalition a) {
  Act act;
  act.id = m.criteria().key(a);
  for (std::size_t i = 0; i < m.criteria().size(); ++i) {
    const auto& attr = m.attributes()[i];
    act.assignments[attr.criterion_id()] = a.contains(i) ? attr.one_level() : attr.zero_level();
  }
  return act;
}

std::vector<double> shapley(const Capacity& mu) {
  const std::size_t n = mu.n();
  const auto f = factorials(n);
  std::vector<double> phi(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
      const Coalition a{s};
      if (a.contains(i)) continue;
      const auto k = static_cast<std::size_t>(a.size());
      const double w = f[k] * f[n - k - 1] / f[n];
      phi[i] += w * (mu[a.with(i)] - mu[a]);
    }
  }
  return phi;
}

double interaction(const Capacity& mu, std::size_t i, std::size_t j) {
  const std::size_t n = mu.n();
  if (i >= n || j >= n) throw Error(ErrorCode::OutOfRange, "criterion index out of range");
  if (i == j) throw Error(ErrorCode::SameCriterion, "interaction needs two distinct criteria");
  if (j < i) std::swap(i, j);  // identical rounding for (i, j) and (j, i)
  const auto f = factorials(n);
  double total = 0.0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const Coalition a{s};
    if (a.contains(i) || a.contains(j)) continue;
    const auto k = static_cast<std::size_t>(a.size());
    const double w = f[k] * f[n - k - 2] / f[n - 1];
    total += w * (mu[a.with(i).with(j)] - mu[a.with(i)] - mu[a.with(j)] + mu[a]);
  }
  return total;
}

}  // namespace mcda
