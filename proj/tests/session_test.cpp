#include <gtest/gtest.h>

#include "mcda/random.hpp"
#include "mcda/session.hpp"

using namespace mcda;
using json_io::Json;

namespace {

std::string fixture(const std::string& name) { return std::string(MCDA_FIXTURES) + "/" + name; }

json_io::CriteriaDefinition two() {
  return json_io::criteria_from_json(json_io::read_file(fixture("criteria_two.json")));
}

Json log_judgments() { return json_io::read_file(fixture("session_log.json"))["judgments"]; }

Json body_for(const Question& q, const std::string& category) {
  Json b{{"better", q.first}, {"worse", q.second}, {"category", category}};
  if (q.scope == kInterScope) {
    b["scope"] = "inter";
  } else {
    b["criterion"] = q.scope.substr(6);
  }
  return b;
}

}  // namespace

TEST(Session, FirstQuestionIsTheFirstEndpointPair) {
  const Session s("s1", two());
  const auto q = s.next_question();
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->scope, "intra:price");
  EXPECT_EQ(q->first, "low");
  EXPECT_EQ(q->second, "high");
  const auto j = to_json(*q);
  EXPECT_EQ(j["categories"].size(), 6u);
  EXPECT_EQ(j["criterion"], "price");
}

TEST(Session, FullPolicyOrder) {
  Session s("s1", two());
  std::vector<std::pair<std::string, std::string>> asked;
  while (auto q = s.next_question()) {
    asked.emplace_back(q->first, q->second);
    s.add_judgment(body_for(*q, "indifferent"));
  }
  const std::vector<std::pair<std::string, std::string>> expected{
      {"low", "high"}, {"high", "medium"}, {"medium", "low"},
      {"good", "poor"}, {"poor", "fair"}, {"fair", "good"},
      {"price,quality", ""}, {"price", ""}, {"quality", ""},
      {"quality", "price"}, {"price,quality", "price"}, {"price,quality", "quality"}};
  EXPECT_EQ(asked, expected);
  EXPECT_TRUE(s.done());
}

TEST(Session, SparsePolicyAsksFewerPairs) {
  auto def = json_io::criteria_from_json(json_io::parse(
      R"({"criteria":[{"id":"a","levels":["l0","l1","l2","l3"],"zero":"l0","one":"l3"}]})"));
  Session s("s1", def, SessionOptions{true});
  std::vector<std::pair<std::string, std::string>> asked;
  while (auto q = s.next_question()) {
    asked.emplace_back(q->first, q->second);
    s.add_judgment(body_for(*q, "small"));
  }
  const std::vector<std::pair<std::string, std::string>> expected{
      {"l3", "l0"}, {"l0", "l1"}, {"l1", "l2"}, {"l2", "l3"}, {"a", ""}};
  EXPECT_EQ(asked, expected);
}

TEST(Session, ScriptedLogYieldsModel) {
  Session s("s1", two());
  for (const auto& body : log_judgments()) s.add_judgment(body);
  EXPECT_TRUE(s.done());
  for (const auto& sc : s.scopes()) EXPECT_EQ(sc.status, ScopeStatus::Consistent) << sc.scope;
  ASSERT_TRUE(s.model().has_value());
  const auto& m = *s.model();
  for (std::uint32_t a = 0; a < 4; ++a) {
    EXPECT_NEAR(evaluate(m, binary_act(m, Coalition{a})), m.capacity()[Coalition{a}], 1e-9);
  }
}

TEST(Session, StatusProgression) {
  Session s("s1", two());
  for (const auto& sc : s.scopes()) EXPECT_EQ(sc.status, ScopeStatus::Incomplete);
  const auto& st = s.add_judgment(log_judgments()[0]);
  EXPECT_EQ(st.scope, "intra:price");
  EXPECT_EQ(st.status, ScopeStatus::Incomplete);
  EXPECT_EQ(st.answered, 1u);
  EXPECT_EQ(st.questions, 3u);
}

TEST(Session, ContradictoryTripleIsReportedAndRevisionClearsIt) {
  auto def = json_io::criteria_from_json(json_io::read_file(fixture("criteria_triple.json")));
  Session s("s1", def);
  s.add_judgment(Json{{"criterion", "c"}, {"better", "a1"}, {"worse", "a2"}, {"category", "very small"}});
  s.add_judgment(Json{{"criterion", "c"}, {"better", "a2"}, {"worse", "a3"}, {"category", "very small"}});
  const auto& st = s.add_judgment(
      Json{{"criterion", "c"}, {"better", "a1"}, {"worse", "a3"}, {"category", "extreme"}});
  EXPECT_EQ(st.status, ScopeStatus::Inconsistent);
  ASSERT_TRUE(st.report.has_value());
  auto ids = st.report->cycle;
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(ids, (std::vector<std::string>{"j1", "j2", "j3"}));
  const auto& fixed = s.revise_judgment(
      "j3", Json{{"criterion", "c"}, {"better", "a1"}, {"worse", "a3"}, {"category", "small"}});
  EXPECT_EQ(fixed.status, ScopeStatus::Consistent);
}

TEST(Session, DuplicatePairConflicts) {
  Session s("s1", two());
  s.add_judgment(log_judgments()[0]);
  Json reversed{{"criterion", "price"}, {"better", "high"}, {"worse", "low"}, {"category", "small"}};
  try {
    s.add_judgment(reversed);
    FAIL();
  } catch (const SessionError& e) {
    EXPECT_EQ(e.kind(), SessionError::Kind::Conflict);
  }
}

TEST(Session, BadBodiesAndMissingIds) {
  Session s("s1", two());
  EXPECT_THROW(s.add_judgment(Json{{"criterion", "price"}, {"better", "low"}}), Error);
  EXPECT_THROW(s.add_judgment(Json{{"scope", "weird"}, {"better", "a"}, {"worse", "b"}, {"category", "small"}}),
               Error);
  EXPECT_THROW(s.add_judgment(Json{{"scope", "inter"}, {"better", "price"}, {"worse", "price"}, {"category", "small"}}),
               Error);
  EXPECT_THROW(s.add_judgment(Json{{"scope", "inter"}, {"better", "size"}, {"worse", ""}, {"category", "small"}}),
               Error);
  try {
    s.delete_judgment("j9");
    FAIL();
  } catch (const SessionError& e) {
    EXPECT_EQ(e.kind(), SessionError::Kind::NotFound);
  }
  EXPECT_TRUE(s.judgments().empty());
}

TEST(Session, TooManyCriteria) {
  Json def{{"criteria", Json::array()}};
  for (int i = 0; i < 7; ++i) {
    def["criteria"].push_back(Json{{"id", "c" + std::to_string(i)}, {"levels", {"a", "b"}}, {"zero", "a"}, {"one", "b"}});
  }
  try {
    Session("s1", json_io::criteria_from_json(def));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(Session, ModelNeedsMonotoneCapacity) {
  Session s("s1", two());
  auto log = log_judgments();
  for (std::size_t k = 0; k < 6; ++k) s.add_judgment(log[k]);
  s.add_judgment(Json{{"scope", "inter"}, {"better", "price"}, {"worse", ""}, {"category", "extreme"}});
  s.add_judgment(Json{{"scope", "inter"}, {"better", "price,quality"}, {"worse", ""}, {"category", "very small"}});
  EXPECT_EQ(s.scope("inter").status, ScopeStatus::MonotonicityConflict);
  EXPECT_FALSE(s.model().has_value());
}

// Any sequence of adds, revisions and deletions equals the replay of its log.
TEST(Session, ReplayEquivalenceProperty) {
  Rng rng(101);
  const auto log = log_judgments();
  const std::vector<std::string> cats{"indifferent", "very small", "small", "mean", "large", "very large", "extreme"};
  for (int t = 0; t < 60; ++t) {
    Session s("s" + std::to_string(t), two(), SessionOptions{t % 3 == 0});
    for (int step = 0; step < 25; ++step) {
      const auto action = rng.below(4);
      try {
        if (action <= 1 || s.judgments().empty()) {
          if (auto q = s.next_question()) s.add_judgment(body_for(*q, cats[rng.below(7)]));
        } else if (action == 2) {
          const auto& j = s.judgments()[rng.below(s.judgments().size())];
          Json body{{"scope", j.scope}, {"better", j.worse}, {"worse", j.better}, {"category", cats[rng.below(7)]}};
          s.revise_judgment(j.id, body);
        } else {
          s.delete_judgment(s.judgments()[rng.below(s.judgments().size())].id);
        }
      } catch (const SessionError&) {
      }
      const auto doc = s.to_json();
      const auto text = json_io::dump(doc);
      EXPECT_EQ(json_io::dump(Session::from_json(json_io::parse(text)).to_json()), text);
    }
  }
}

TEST(Session, NextQuestionNeverRepeatsAnAnsweredPair) {
  Session s("s1", two());
  for (int k = 0; k < 12; ++k) {
    const auto q = s.next_question();
    ASSERT_TRUE(q.has_value());
    for (const auto& j : s.judgments()) {
      if (j.scope != q->scope) continue;
      EXPECT_FALSE((j.better == q->first && j.worse == q->second) ||
                   (j.better == q->second && j.worse == q->first));
    }
    s.add_judgment(log_judgments()[static_cast<std::size_t>(k)]);
  }
  EXPECT_FALSE(s.next_question().has_value());
}
