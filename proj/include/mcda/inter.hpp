#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mcda/elicitation.hpp"
#include "mcda/setfn.hpp"

namespace mcda {

inline constexpr std::size_t kMaxInterCriteria = 6;

struct CoalitionJudgment {
  std::string id;
  Coalition better;
  Coalition worse;
  Category category;

  friend bool operator==(const CoalitionJudgment&, const CoalitionJudgment&) = default;
};

/// (mu(A) - mu(B)) / (mu(C) - mu(D)) = k.
struct CoalitionRatio {
  Coalition a;
  Coalition b;
  Coalition c;
  Coalition d;
  double k;
};

/// The binary acts (1_A, 0_-A) in bitmask order. Throws TooLarge for n > 6.
std::vector<Coalition> make_inter_items(std::size_t n);

/// Pre-normalization potentials mapped to mu(A) = (v(A) - v(empty)) / (v(N) - v(empty)).
/// Throws DegenerateEndpoints when v(N) <= v(empty).
Game normalize_potentials(std::size_t n, std::span<const double> potentials);

struct MonotonicityViolation {
  Game game;  ///< normalized but not monotone
  std::vector<CoveringViolation> pairs;
};

struct CapacitySolution {
  Capacity capacity;
  std::vector<double> potentials;
  double unit;  ///< v(N) - v(empty)
};

struct InterOptions {
  /// Adds v(A) <= v(A u {i}) for every covering pair instead of auditing afterwards.
  bool enforce_monotone = false;
};

/// Graph over the 2^n coalitions (node index = bitmask, names from `criteria`).
ConstraintGraph build_coalition_graph(const CriteriaSet& criteria,
                                      std::span<const CoalitionJudgment> judgments,
                                      const InterOptions& options = {});

using CapacityOutcome = std::variant<CapacitySolution, InconsistencyReport, MonotonicityViolation>;

CapacityOutcome solve_capacity_scale(const CriteriaSet& criteria,
                                     std::span<const CoalitionJudgment> judgments,
                                     const InterOptions& options = {});

/// mu(A) = k(A, empty, N, empty). Throws MissingRatio or NotMonotone.
Capacity capacity_from_ratios(std::size_t n, std::span<const CoalitionRatio> ratios);

std::vector<RatioViolation> check_inter_d(std::span<const CoalitionRatio> ratios, double tol);

}  // namespace mcda
