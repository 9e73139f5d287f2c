#include <gtest/gtest.h>

#include <httplib.h>

#include <fstream>
#include <sstream>
#include <thread>

#include "mcda/service.hpp"

using namespace mcda;
using json_io::Json;

namespace {

std::string fixture(const std::string& name) { return std::string(MCDA_FIXTURES) + "/" + name; }

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mcda_service_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json body(const HttpResponse& r) { return json_io::parse(r.body); }

std::string create(Service& svc) {
  const auto log = json_io::read_file(fixture("session_log.json"));
  const auto r = svc.handle("POST", "/v1/sessions", json_io::dump(Json{{"criteria", log["criteria"]}}));
  EXPECT_EQ(r.status, 201);
  return body(r)["id"].get<std::string>();
}

}  // namespace

TEST(Service, HealthAndSchemaTag) {
  Service svc({fresh_dir("health")});
  const auto r = svc.handle("GET", "/v1/health", "");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body(r)["status"], "ok");
  EXPECT_EQ(body(r)["schema"], "v1");
  const auto missing = svc.handle("GET", "/v1/nothing", "");
  EXPECT_EQ(missing.status, 404);
  EXPECT_EQ(body(missing)["schema"], "v1");
}

TEST(Service, CreateValidation) {
  Service svc({fresh_dir("create")});
  EXPECT_EQ(svc.handle("POST", "/v1/sessions", "not json").status, 400);
  EXPECT_EQ(svc.handle("POST", "/v1/sessions",
                       R"({"criteria":[{"id":"a","levels":["x","x"],"zero":"x","one":"x"}]})")
                .status,
            400);
  Json seven{{"criteria", Json::array()}};
  for (int i = 0; i < 7; ++i) {
    seven["criteria"].push_back(Json{{"id", "c" + std::to_string(i)}, {"levels", {"a", "b"}}, {"zero", "a"}, {"one", "b"}});
  }
  const auto r = svc.handle("POST", "/v1/sessions", seven.dump());
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(body(r)["error"]["code"], "TooLarge");
  EXPECT_EQ(svc.session_count(), 0u);
}

TEST(Service, ElicitationFlow) {
  Service svc({fresh_dir("flow")});
  const auto id = create(svc);
  const std::string base = "/v1/sessions/" + id;
  EXPECT_EQ(svc.handle("GET", "/v1/sessions/s999/next-question", "").status, 404);

  auto q = body(svc.handle("GET", base + "/next-question", ""));
  EXPECT_EQ(q["done"], false);
  EXPECT_EQ(q["pair"], Json({"low", "high"}));

  EXPECT_EQ(svc.handle("GET", base + "/model", "").status, 409);
  EXPECT_EQ(svc.handle("POST", base + "/rank", "[]").status, 409);

  const auto log = json_io::read_file(fixture("session_log.json"))["judgments"];
  for (const auto& j : log) {
    const auto r = svc.handle("POST", base + "/judgments", j.dump());
    ASSERT_EQ(r.status, 201) << r.body;
    EXPECT_NE(body(r)["status"], "inconsistent");
  }
  EXPECT_EQ(svc.handle("POST", base + "/judgments", log[0].dump()).status, 409);
  EXPECT_EQ(body(svc.handle("GET", base + "/next-question", "")), (Json{{"done", true}, {"schema", "v1"}}));

  const auto model = svc.handle("GET", base + "/model", "");
  ASSERT_EQ(model.status, 200);
  const auto m = json_io::model_from_json(body(model));

  const auto acts = json_io::read_file(fixture("acts_binary.json"));
  const auto ranked = body(svc.handle("POST", base + "/rank", acts.dump()));
  ASSERT_EQ(ranked["ranking"].size(), 4u);
  EXPECT_EQ(ranked["ranking"][0]["id"], "both");
  EXPECT_EQ(body(svc.handle("POST", base + "/rank", "[]"))["ranking"], Json::array());
  EXPECT_EQ(svc.handle("POST", base + "/rank", json_io::read_file(fixture("acts_incomplete.json")).dump()).status,
            400);

  const auto cons = body(svc.handle("GET", base + "/consistency", ""));
  EXPECT_EQ(cons["model_ready"], true);
  EXPECT_EQ(cons["scopes"]["inter"]["status"], "consistent");
}

TEST(Service, InconsistencyAndRevision) {
  Service svc({fresh_dir("revise")});
  auto r = svc.handle("POST", "/v1/sessions", json_io::read_file(fixture("criteria_triple.json")).dump());
  const std::string base = "/v1/sessions/" + body(r)["id"].get<std::string>();
  for (const auto& j : json_io::read_file(fixture("intra_triple.json"))) {
    Json b = j;
    b.erase("id");
    r = svc.handle("POST", base + "/judgments", b.dump());
  }
  auto snap = body(r);
  EXPECT_EQ(snap["status"], "inconsistent");
  EXPECT_EQ(snap["report"]["cycle"].size(), 3u);
  const auto blocked = svc.handle("GET", base + "/model", "");
  EXPECT_EQ(blocked.status, 409);
  EXPECT_EQ(body(blocked)["scopes"][0]["status"], "inconsistent");

  r = svc.handle("PUT", base + "/judgments/j3",
                 R"({"criterion":"c","better":"a1","worse":"a3","category":"small"})");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body(r)["status"], "consistent");
  EXPECT_EQ(svc.handle("PUT", base + "/judgments/j9", R"({"criterion":"c","better":"a1","worse":"a3","category":"small"})")
                .status,
            404);
  r = svc.handle("DELETE", base + "/judgments/j3", "");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(body(r)["status"], "incomplete");
  EXPECT_EQ(svc.handle("DELETE", base + "/judgments/j3", "").status, 404);
}

TEST(Service, RejectedMutationLeavesStateUntouched) {
  const auto dir = fresh_dir("reject");
  Service svc({dir});
  const auto id = create(svc);
  const auto before = slurp(svc.session_path(id));
  EXPECT_EQ(svc.handle("POST", "/v1/sessions/" + id + "/judgments", R"({"criterion":"price"})").status, 400);
  EXPECT_EQ(slurp(svc.session_path(id)), before);
}

TEST(Service, PersistenceSurvivesRestart) {
  const auto dir = fresh_dir("persist");
  std::string id, doc, file;
  {
    Service svc({dir});
    id = create(svc);
    const auto log = json_io::read_file(fixture("session_log.json"))["judgments"];
    for (std::size_t k = 0; k < 5; ++k) svc.handle("POST", "/v1/sessions/" + id + "/judgments", log[k].dump());
    svc.handle("DELETE", "/v1/sessions/" + id + "/judgments/j2", "");
    create(svc);
    doc = svc.handle("GET", "/v1/sessions/" + id, "").body;
    file = slurp(svc.session_path(id));
  }
  Service again({dir});
  EXPECT_EQ(again.session_count(), 2u);
  EXPECT_EQ(again.handle("GET", "/v1/sessions/" + id, "").body, doc);
  EXPECT_EQ(slurp(again.session_path(id)), file);
  EXPECT_EQ(body(again.handle("POST", "/v1/sessions", json_io::read_file(fixture("criteria_two.json")).dump()))["id"],
            "s3");
}

TEST(Service, OverHttpWithCors) {
  Service svc({fresh_dir("http")});
  const int port = svc.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread server([&] { svc.listen(); });
  httplib::Client cli("127.0.0.1", port);
  cli.set_connection_timeout(5);
  auto health = cli.Get("/v1/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  EXPECT_EQ(health->get_header_value("Access-Control-Allow-Origin"), "*");
  auto created = cli.Post("/v1/sessions", json_io::read_file(fixture("criteria_two.json")).dump(),
                          "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  auto pre = cli.Options("/v1/sessions");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);
  EXPECT_FALSE(pre->get_header_value("Access-Control-Allow-Methods").empty());
  svc.stop();
  server.join();
}

TEST(Service, ConcurrentSessions) {
  Service svc({fresh_dir("concurrent")});
  std::vector<std::string> ids;
  for (int k = 0; k < 4; ++k) ids.push_back(create(svc));
  const auto log = json_io::read_file(fixture("session_log.json"))["judgments"];
  std::vector<std::thread> threads;
  for (const auto& id : ids) {
    threads.emplace_back([&, id] {
      for (const auto& j : log) svc.handle("POST", "/v1/sessions/" + id + "/judgments", j.dump());
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& id : ids) EXPECT_EQ(svc.handle("GET", "/v1/sessions/" + id + "/model", "").status, 200);
}
