#include <gtest/gtest.h>

#include "mcda/aggregate.hpp"
#include "mcda/identify.hpp"
#include "mcda/random.hpp"
#include "oracles.hpp"

using namespace mcda;

namespace {

std::vector<ScoredAct> scored_by(const Game& g, std::size_t count, Rng& rng) {
  std::vector<ScoredAct> data;
  for (std::size_t k = 0; k < count; ++k) {
    auto x = random_vector(g.n(), rng);
    const double y = choquet(g, x);
    data.push_back({std::move(x), y});
  }
  return data;
}

void expect_feasible(const FitReport& r) {
  EXPECT_LE(r.max_violation, 1e-9);
  EXPECT_TRUE(monotonicity_violations(r.capacity).empty());
  EXPECT_EQ(r.capacity[Coalition::empty()], 0.0);
  EXPECT_EQ(r.capacity[Coalition::full(r.capacity.n())], 1.0);
  EXPECT_NO_THROW(make_capacity(r.capacity.game(), 1e-9));
}

}  // namespace

TEST(Identify, NoiselessDataIsFitExactly) {
  Rng rng(71);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto truth = random_capacity(n, rng);
      const auto data = scored_by(truth, 3 * (std::size_t{1} << n), rng);
      const auto r = fit_capacity(n, data);
      expect_feasible(r);
      EXPECT_LE(r.rmse, 1e-6) << "n=" << n;
    }
  }
}

TEST(Identify, MinScoresRecoverUnanimity) {
  Rng rng(72);
  std::vector<ScoredAct> data;
  for (int k = 0; k < 200; ++k) {
    auto x = random_vector(3, rng);
    const double y = *std::min_element(x.begin(), x.end());
    data.push_back({std::move(x), y});
  }
  const auto r = fit_capacity(3, data);
  expect_feasible(r);
  EXPECT_LE(r.rmse, 1e-6);
  const auto u = unanimity(3, Coalition::full(3));
  for (const auto& d : data) EXPECT_NEAR(choquet(r.capacity, d.profile), choquet(u, d.profile), 1e-6);
}

TEST(Identify, SingleBinaryDatumIsMatched) {
  for (std::uint32_t a = 1; a < 7; ++a) {
    for (double y : {0.0, 0.2, 0.9, 1.0}) {
      std::vector<double> x(3);
      for (std::size_t i = 0; i < 3; ++i) x[i] = (a >> i) & 1u;
      const std::vector<ScoredAct> data{{x, y}};
      const auto r = fit_capacity(3, data);
      expect_feasible(r);
      EXPECT_NEAR(choquet(r.capacity, x), y, 1e-6);
    }
  }
}

TEST(Identify, NeverWorseThanStartOrBaseline) {
  Rng rng(73);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 3;
    std::vector<ScoredAct> data;
    for (int k = 0; k < 40; ++k) {
      auto x = random_vector(n, rng);
      data.push_back({std::move(x), rng.uniform(-0.5, 1.5)});
    }
    FitOptions opts;
    opts.baseline = random_capacity(n, rng);
    const auto r = fit_capacity(n, data, opts);
    expect_feasible(r);
    EXPECT_LE(r.objective, fit_objective(*opts.baseline, data) + 1e-6);
    EXPECT_LE(r.objective, r.start_objective + 1e-12);
    EXPECT_NEAR(r.objective, fit_objective(r.capacity, data), 1e-12);
  }
}

TEST(Identify, OptimalityAgainstRandomFeasiblePoints) {
  Rng rng(74);
  std::vector<ScoredAct> data;
  for (int k = 0; k < 60; ++k) {
    auto x = random_vector(3, rng);
    const double y = std::pow(x[0], 2) * 0.5 + x[1] * x[2] * 0.5;
    data.push_back({std::move(x), y});
  }
  const auto r = fit_capacity(3, data);
  for (int t = 0; t < 500; ++t) {
    EXPECT_LE(r.objective, fit_objective(oracle::belief_capacity(3, rng), data) + 1e-9);
    EXPECT_LE(r.objective, fit_objective(random_capacity(3, rng), data) + 1e-9);
  }
}

TEST(Identify, DuplicatedDatumKeepsZeroResidual) {
  Rng rng(75);
  const auto truth = random_capacity(3, rng);
  auto data = scored_by(truth, 30, rng);
  data.push_back(data.front());
  const auto r = fit_capacity(3, data);
  EXPECT_LE(std::abs(choquet(r.capacity, data.front().profile) - data.front().score), 1e-6);
  EXPECT_LE(r.rmse, 1e-6);
}

TEST(Identify, SingleCriterion) {
  const std::vector<ScoredAct> data{{{0.4}, 0.3}};
  const auto r = fit_capacity(1, data);
  EXPECT_EQ(r.capacity[Coalition{1}], 1.0);
  EXPECT_NEAR(r.objective, 0.01, 1e-15);
}

TEST(Identify, Preconditions) {
  EXPECT_THROW(fit_capacity(3, {}), Error);
  const std::vector<ScoredAct> wrong{{{0.1, 0.2}, 0.1}};
  EXPECT_THROW(fit_capacity(3, wrong), Error);
  const std::vector<ScoredAct> range{{{0.1, 1.5}, 0.1}};
  EXPECT_THROW(fit_capacity(2, range), Error);
  const std::vector<ScoredAct> big{{std::vector<double>(7, 0.5), 0.5}};
  try {
    fit_capacity(7, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Identify, SixCriteriaNoiseless) {
  Rng rng(76);
  const auto truth = random_capacity(6, rng);
  const auto data = scored_by(truth, 3 * 64, rng);
  const auto r = fit_capacity(6, data);
  expect_feasible(r);
  EXPECT_LE(r.rmse, 1e-6);
}
