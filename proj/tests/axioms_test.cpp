#include <gtest/gtest.h>

#include "mcda/axioms.hpp"
#include "mcda/random.hpp"
#include "oracles.hpp"

using namespace mcda;

namespace {

AxiomCheckConfig small_config(std::uint64_t seed = 1) {
  AxiomCheckConfig cfg;
  cfg.samples = 200;
  cfg.seed = seed;
  return cfg;
}

Capacity non_additive() { return make_capacity(2, std::vector<double>{0.0, 0.3, 0.5, 1.0}); }

}  // namespace

TEST(Axioms, ChoquetPassesEveryAxiom) {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto mu = random_capacity(2 + t % 3, rng);
    const auto f = aggregators::choquet();
    const auto cfg = small_config(static_cast<std::uint64_t>(t));
    EXPECT_TRUE(check_pw(f, mu, cfg).passed);
    EXPECT_TRUE(check_weak_spl(f, mu, cfg).passed);
    EXPECT_TRUE(check_in(f, mu, cfg).passed);
    EXPECT_TRUE(check_spl(f, mu, cfg).passed);
    const std::vector<std::pair<Game, Game>> pairs{{mu.game(), random_game(mu.n(), rng)}};
    EXPECT_TRUE(check_lm(f, pairs, cfg).passed);
  }
}

TEST(Axioms, PwIsExactForChoquet) {
  Rng rng(32);
  auto cfg = small_config();
  cfg.tolerance = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto report = check_pw(aggregators::choquet(), random_capacity(1 + t % 5, rng), cfg);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.cases, std::size_t{1} << (1 + t % 5));
  }
}

TEST(Axioms, MeanFailsPwAtNonAdditiveCoalition) {
  const auto report = check_pw(aggregators::mean(), non_additive(), small_config());
  EXPECT_FALSE(report.passed);
  ASSERT_FALSE(report.counterexamples.empty());
  // mean(1,0) = 0.5 against mu({1}) = 0.3
  const auto& ce = report.counterexamples.front();
  ASSERT_TRUE(ce.coalition.has_value());
  EXPECT_EQ(*ce.coalition, Coalition{1});
  EXPECT_NEAR(ce.got, 0.5, 1e-15);
  EXPECT_NEAR(ce.expected, 0.3, 1e-15);
}

TEST(Axioms, MeanPassesPwOnUniformAdditiveCapacity) {
  const std::vector<double> w{0.25, 0.25, 0.25, 0.25};
  EXPECT_TRUE(check_pw(aggregators::mean(), additive_from_weights(w), small_config()).passed);
}

TEST(Axioms, MaxFailsPwAtSingletons) {
  const auto report = check_pw(aggregators::max(), non_additive(), small_config());
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.failures, 2u);
  for (const auto& ce : report.counterexamples) {
    ASSERT_TRUE(ce.coalition.has_value());
    EXPECT_EQ(ce.coalition->size(), 1);
  }
}

TEST(Axioms, MinFailsPwAndWsumFailsOffAdditivity) {
  EXPECT_FALSE(check_pw(aggregators::min(), non_additive(), small_config()).passed);
  Rng rng(33);
  const auto mu = make_capacity(2, std::vector<double>{0.0, 0.6, 0.7, 1.0});
  EXPECT_FALSE(check_pw(aggregators::weighted_sum(), mu, small_config()).passed);
}

TEST(Axioms, SugenoLikeFailsLinearity) {
  const auto mu = non_additive();
  const std::vector<std::pair<Game, Game>> pairs{{mu.game(), dual(mu).game()}};
  EXPECT_FALSE(check_lm(aggregators::sugeno_like(), pairs, small_config()).passed);
}

TEST(Axioms, SumOfSquaresFailsSpl) {
  EXPECT_FALSE(check_spl(aggregators::sum_of_squares(), non_additive(), small_config()).passed);
}

TEST(Axioms, ReportsAreDeterministicInTheSeed) {
  const auto mu = non_additive();
  const auto a = check_in(aggregators::choquet(), mu, small_config(5));
  const auto b = check_in(aggregators::choquet(), mu, small_config(5));
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.failures, b.failures);
}

TEST(Axioms, CounterexampleCapIsHonoured) {
  auto cfg = small_config();
  cfg.max_counterexamples = 3;
  const auto report = check_spl(aggregators::sum_of_squares(), non_additive(), cfg);
  EXPECT_GT(report.failures, 3u);
  EXPECT_EQ(report.counterexamples.size(), 3u);
}

TEST(Axioms, ConfigValidation) {
  AxiomCheckConfig cfg;
  cfg.alpha_range = {0.0, 1.0};
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.tolerance = -1.0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(Characterization, ChoquetSatisfiesTheCharacterization) {
  auto cfg = small_config();
  const auto s = characterization_suite(aggregators::choquet(), cfg, 12);
  EXPECT_TRUE(s.characterization_holds);
  EXPECT_TRUE(s.all_passed);
  ASSERT_TRUE(s.choquet_deviation.has_value());
  EXPECT_EQ(*s.choquet_deviation, 0.0);
}

TEST(Characterization, FoilsBreakAtLeastOneAxiom) {
  auto cfg = small_config();
  for (const auto& f : {aggregators::mean(), aggregators::min(), aggregators::max(),
                        aggregators::median(), aggregators::weighted_sum(),
                        aggregators::sugeno_like(), aggregators::sum_of_squares()}) {
    const auto s = characterization_suite(f, cfg, 12);
    EXPECT_FALSE(s.characterization_holds) << f.name;
    const bool any_failed = std::any_of(s.reports.begin(), s.reports.begin() + 4,
                                        [](const AxiomReport& r) { return !r.passed; });
    EXPECT_TRUE(any_failed) << f.name;
    EXPECT_FALSE(s.choquet_deviation.has_value()) << f.name;
  }
}

TEST(Characterization, ReportOrderAndNames) {
  const auto s = characterization_suite(aggregators::choquet(), small_config(), 3);
  ASSERT_EQ(s.reports.size(), 5u);
  const char* names[] = {"LM", "In", "PW", "weakSPL", "SPL"};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(to_string(s.reports[k].axiom), names[k]);
  EXPECT_FALSE(s.reports[0].note.empty());
}
