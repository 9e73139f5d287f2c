#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcda/aggregate.hpp"
#include "mcda/setfn.hpp"

namespace mcda {

enum class Axiom { LM, In, PW, WeakSPL, SPL };

std::string_view to_string(Axiom axiom) noexcept;

struct Interval {
  double lo;
  double hi;
};

struct AxiomCheckConfig {
  std::size_t samples = 1000;
  Interval alpha_range{0.01, 10.0};
  Interval beta_range{-5.0, 5.0};
  Interval gamma_range{-2.0, 2.0};
  Interval delta_range{-2.0, 2.0};
  /// Range of the sampled profile entries.
  Interval profile_range{0.0, 1.0};
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  /// Failures beyond this count are tallied but not recorded.
  std::size_t max_counterexamples = 10;

  /// Throws InvalidInput unless alpha_range > 0, tolerance >= 0, samples >= 1.
  void validate() const;
};

struct Counterexample {
  std::vector<double> x;
  std::vector<double> x_prime;  ///< dominating profile, (In) only
  std::optional<Coalition> coalition;
  std::map<std::string, double> params;
  double expected = 0.0;
  double got = 0.0;
  double deviation = 0.0;
};

struct AxiomReport {
  Axiom axiom;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::string note;
};

/// F(1_A, 0_-A) = mu(A) on all 2^n vertices.
AxiomReport check_pw(const Aggregator& f, const Game& mu, const AxiomCheckConfig& cfg = {});

/// F((alpha+beta)_A, beta_-A) = alpha F(1_A, 0_-A) + beta for sampled A, alpha > 0, beta.
AxiomReport check_weak_spl(const Aggregator& f, const Game& mu, const AxiomCheckConfig& cfg = {});

/// x <= x' componentwise implies F(x) <= F(x'). Every covering pair of binary
/// vertices is checked before the random pairs.
AxiomReport check_in(const Aggregator& f, const Game& mu, const AxiomCheckConfig& cfg = {});

/// F_{gamma g + delta g'}(x) = gamma F_g(x) + delta F_g'(x) for sampled x, gamma, delta.
AxiomReport check_lm(const Aggregator& f, std::span<const std::pair<Game, Game>> pairs,
                     const AxiomCheckConfig& cfg = {});

/// F(alpha x + beta) = alpha F(x) + beta for sampled x, alpha > 0, beta.
AxiomReport check_spl(const Aggregator& f, const Game& mu, const AxiomCheckConfig& cfg = {});

struct CharacterizationSummary {
  std::string aggregator;
  std::vector<AxiomReport> reports;  ///< LM, In, PW, weak SPL, SPL
  /// Set only when LM, In, PW and weak SPL all pass.
  std::optional<double> choquet_deviation;
  bool characterization_holds = false;  ///< four axioms pass and deviation <= tolerance
  bool all_passed = false;              ///< additionally SPL passes
};

/// Runs the four characterizing axioms (plus SPL) over the given capacities;
/// when the four pass, also measures max |F(x) - choquet(mu, x)| on sampled x.
CharacterizationSummary characterization_suite(const Aggregator& f, std::span<const Capacity> capacities,
                               const AxiomCheckConfig& cfg = {});

/// Same, over `count` seeded random capacities with n cycling through 2..4.
CharacterizationSummary characterization_suite(const Aggregator& f, const AxiomCheckConfig& cfg = {},
                               std::size_t count = 20);

}  // namespace mcda
