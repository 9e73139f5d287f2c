#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcda/setfn.hpp"

namespace mcda {

struct ScoredAct {
  std::vector<double> profile;  ///< satisfaction degrees in [0,1]
  double score;
};

struct FitOptions {
  std::size_t max_iterations = 100000;
  /// Step-length and multiplier threshold of the active-set iteration, relative
  /// to the problem scale.
  double tolerance = 1e-12;
  std::optional<Capacity> baseline;
};

struct FitReport {
  Capacity capacity;
  double objective;      ///< sum of squared residuals
  double rmse;
  double max_violation;  ///< worst covering-pair decrease of the raw solver iterate
  std::size_t iterations;
  double start_objective;  ///< best of uniform additive and baseline
};

/// Sum over the data of (choquet(g, profile) - score)^2.
double fit_objective(const Game& g, std::span<const ScoredAct> data);

/// Least-squares capacity: minimizes sum_j (C_mu(x^j) - y^j)^2 subject to
/// mu(empty) = 0, mu(N) = 1 and v(A) <= v(A u {i}) on every covering pair.
///
/// The Choquet value is linear in mu for a fixed profile, so this is a convex
/// QP over the 2^n - 2 interior coalition values. It is solved with a primal
/// active-set method started from the better of the uniform additive capacity
/// and the optional baseline; the reduced Newton step uses a minimum-norm
/// solve, so unidentified coalitions are allowed.
FitReport fit_capacity(std::size_t n, std::span<const ScoredAct> data, const FitOptions& options = {});

}  // namespace mcda
