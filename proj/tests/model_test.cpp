#include <gtest/gtest.h>

#include "mcda/aggregate.hpp"
#include "mcda/model.hpp"
#include "mcda/random.hpp"
#include "oracles.hpp"

using namespace mcda;

namespace {

DecisionModel two_criteria(const std::vector<double>& mu) {
  const AttributeScale price("price", {"high", "medium", "low"}, "high", "low");
  const AttributeScale quality("quality", {"poor", "fair", "good"}, "poor", "good");
  const UtilityScale up(price, {{"high", 0.0}, {"medium", 0.6}, {"low", 1.0}});
  const UtilityScale uq(quality, {{"poor", 0.0}, {"fair", 0.25}, {"good", 1.0}});
  return DecisionModel(CriteriaSet({"price", "quality"}), {price, quality}, {up, uq},
                       make_capacity(2, mu));
}

Act act(std::string id, std::string p, std::string q) {
  return Act{std::move(id), {{"price", std::move(p)}, {"quality", std::move(q)}}};
}

const std::vector<double> kMu{0.0, 0.3, 0.5, 1.0};

}  // namespace

TEST(Model, ReferenceActs) {
  const auto m = two_criteria(kMu);
  EXPECT_EQ(evaluate(m, act("z", "high", "poor")), 0.0);
  EXPECT_EQ(evaluate(m, act("o", "low", "good")), 1.0);
  for (std::uint32_t s = 0; s < 4; ++s) {
    EXPECT_EQ(evaluate(m, binary_act(m, Coalition{s})), kMu[s]);
  }
}

TEST(Model, EvaluateIsChoquetOfUtilities) {
  const auto m = two_criteria(kMu);
  const auto a = act("a", "medium", "fair");
  EXPECT_EQ(evaluate(m, a), choquet(m.capacity(), std::vector<double>{0.6, 0.25}));
}

TEST(Model, ActErrors) {
  const auto m = two_criteria(kMu);
  const Act missing{"m", {{"price", "low"}}};
  try {
    evaluate(m, missing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteAct);
  }
  try {
    evaluate(m, act("u", "free", "good"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLevel);
  }
  const Act extra{"x", {{"price", "low"}, {"quality", "good"}, {"colour", "red"}}};
  EXPECT_THROW(evaluate(m, extra), Error);
}

TEST(Model, RankOrdersBinaryActsByCapacity) {
  const auto m = two_criteria(kMu);
  const std::vector<Act> acts{binary_act(m, Coalition{1}), binary_act(m, Coalition{2}),
                              binary_act(m, Coalition{3})};
  const auto ranked = rank(m, acts);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].act.id, "price,quality");
  EXPECT_EQ(ranked[1].act.id, "quality");
  EXPECT_EQ(ranked[2].act.id, "price");
}

TEST(Model, RankIsStableOnTies) {
  const auto m = two_criteria(kMu);
  const std::vector<Act> acts{act("first", "low", "poor"), act("all0", "high", "poor"),
                              act("second", "low", "poor"), act("all1", "low", "good")};
  const auto ranked = rank(m, acts);
  EXPECT_EQ(ranked[0].act.id, "all1");
  EXPECT_EQ(ranked[1].act.id, "first");
  EXPECT_EQ(ranked[2].act.id, "second");
  EXPECT_EQ(ranked[3].act.id, "all0");
}

TEST(Model, EvaluationIsInternal) {
  Rng rng(81);
  for (int t = 0; t < 200; ++t) {
    const auto mu = random_capacity(2, rng);
    const std::vector<double> v(mu.game().values().begin(), mu.game().values().end());
    const auto m = two_criteria(v);
    const Act a = act("a", std::vector<std::string>{"high", "medium", "low"}[rng.below(3)],
                      std::vector<std::string>{"poor", "fair", "good"}[rng.below(3)]);
    const auto u = m.profile(a);
    const double value = evaluate(m, a);
    EXPECT_GE(value, std::min(u[0], u[1]) - 1e-12);
    EXPECT_LE(value, std::max(u[0], u[1]) + 1e-12);
  }
}

TEST(Model, ProportionalityOnOneCriterion) {
  Rng rng(82);
  for (int t = 0; t < 200; ++t) {
    const auto mu = random_capacity(2, rng);
    if (mu[Coalition{1}] <= 0.0) continue;
    const auto m = two_criteria(std::vector<double>(mu.game().values().begin(), mu.game().values().end()));
    for (const char* level : {"high", "medium", "low"}) {
      const double ratio = evaluate(m, act("x", level, "poor")) / evaluate(m, act("one", "low", "poor"));
      EXPECT_NEAR(ratio, m.scales()[0].at(level), 1e-9);
    }
  }
}

TEST(Model, ConstructionChecksDimensions) {
  const AttributeScale price("price", {"high", "low"}, "high", "low");
  const UtilityScale up(price, {{"high", 0.0}, {"low", 1.0}});
  EXPECT_THROW(DecisionModel(CriteriaSet({"price", "quality"}), {price}, {up}, make_capacity(2, kMu)),
               Error);
  EXPECT_THROW(DecisionModel(CriteriaSet({"quality"}), {price}, {up},
                             make_capacity(1, std::vector<double>{0.0, 1.0})),
               Error);
}

TEST(Shapley, Examples) {
  const auto phi = shapley(make_capacity(2, kMu));
  EXPECT_NEAR(phi[0], 0.4, 1e-15);
  EXPECT_NEAR(phi[1], 0.6, 1e-15);
  const std::vector<double> w{0.1, 0.2, 0.3, 0.4};
  const auto add = shapley(additive_from_weights(w));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(add[i], w[i], 1e-15);
  std::vector<double> sym(8);
  for (std::uint32_t s = 0; s < 8; ++s) sym[s] = std::vector<double>{0.0, 0.1, 0.6, 1.0}[oracle::popcount(s)];
  for (double p : shapley(make_capacity(3, sym))) EXPECT_NEAR(p, 1.0 / 3.0, 1e-15);
}

TEST(Shapley, MatchesPermutationAverageAndIsEfficient) {
  Rng rng(83);
  for (int t = 0; t < 200; ++t) {
    const auto mu = random_capacity(1 + t % 5, rng);
    const auto phi = shapley(mu);
    const auto ref = oracle::shapley_by_orders(mu);
    double sum = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      EXPECT_NEAR(phi[i], ref[i], 1e-12);
      EXPECT_GE(phi[i], 0.0);
      sum += phi[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(Interaction, Examples) {
  EXPECT_NEAR(interaction(make_capacity(2, kMu), 0, 1), 0.2, 1e-15);
  EXPECT_EQ(interaction(unanimity(2, Coalition{3}), 0, 1), 1.0);
  const std::vector<double> w{0.2, 0.3, 0.5};
  EXPECT_NEAR(interaction(additive_from_weights(w), 0, 2), 0.0, 1e-15);
  try {
    interaction(make_capacity(2, kMu), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SameCriterion);
  }
}

TEST(Interaction, SymmetricAndMatchesMobiusForm) {
  Rng rng(84);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 4;
    const auto mu = random_capacity(n, rng);
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    EXPECT_EQ(interaction(mu, i, j), interaction(mu, j, i));
    EXPECT_NEAR(interaction(mu, i, j), oracle::interaction_via_mobius(mu, i, j), 1e-12);
  }
}
