#include "mcda/service.hpp"

#include <httplib.h>

#include <fstream>
#include <regex>

namespace mcda {

using json_io::Json;

namespace {

HttpResponse reply(int status, Json body) {
  body["schema"] = "v1";
  return {status, json_io::dump(body)};
}

HttpResponse error_reply(int status, std::string_view code, const std::string& message,
                         Json extra = Json::object()) {
  extra["error"] = Json{{"code", std::string(code)}, {"message", message}};
  return reply(status, std::move(extra));
}

std::size_t session_number(const std::string& id) {
  if (id.size() < 2 || id[0] != 's') return 0;
  std::size_t k = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') return 0;
    k = k * 10 + static_cast<std::size_t>(id[i] - '0');
  }
  return k;
}

}  // namespace

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  std::filesystem::create_directories(options_.state_dir);
  for (const auto& entry : std::filesystem::directory_iterator(options_.state_dir)) {
    if (entry.path().extension() != ".json") continue;
    auto session = std::make_unique<Session>(Session::from_json(json_io::read_file(entry.path())));
    next_session_ = std::max(next_session_, session_number(session->id()) + 1);
    auto e = std::make_shared<Entry>();
    e->session = std::move(session);
    sessions_.emplace(e->session->id(), std::move(e));
  }
}

Service::~Service() { stop(); }

std::filesystem::path Service::session_path(const std::string& id) const {
  return options_.state_dir / (id + ".json");
}

std::size_t Service::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<Service::Entry> Service::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void Service::persist(const Session& s) const {
  const auto path = session_path(s.id());
  auto tmp = path;
  tmp += ".tmp";
  json_io::write_file(tmp, s.to_json());
  std::filesystem::rename(tmp, path);
}

HttpResponse Service::handle(const std::string& method, const std::string& path,
                             const std::string& body) {
  static const std::regex session_re(R"(/v1/sessions/([A-Za-z0-9_-]+)(/.*)?)");
  try {
    if (path == "/v1/health" && method == "GET") return reply(200, Json{{"status", "ok"}});
    if (path == "/v1/sessions" && method == "POST") return create_session(body);
    std::smatch m;
    if (std::regex_match(path, m, session_re)) {
      return session_route(method, m[1].str(), m[2].matched ? m[2].str() : "", body);
    }
    return error_reply(404, "NotFound", "no route " + method + " " + path);
  } catch (const SessionError& e) {
    const bool missing = e.kind() == SessionError::Kind::NotFound;
    return error_reply(missing ? 404 : 409, missing ? "NotFound" : "Conflict", e.what());
  } catch (const Error& e) {
    return error_reply(400, to_string(e.code()), e.what());
  } catch (const Json::exception& e) {
    return error_reply(400, "InvalidInput", e.what());
  } catch (const std::exception& e) {
    return error_reply(500, "Internal", e.what());
  }
}

HttpResponse Service::create_session(const std::string& body) {
  const Json doc = json_io::parse(body);
  auto def = json_io::criteria_from_json(doc);
  SessionOptions opts{options_.sparse};
  if (auto it = doc.find("options"); it != doc.end() && it->contains("sparse")) {
    opts.sparse = (*it)["sparse"].get<bool>();
  }
  std::unique_lock lock(sessions_mutex_);
  const std::string id = "s" + std::to_string(next_session_);
  auto e = std::make_shared<Entry>();
  e->session = std::make_unique<Session>(id, std::move(def), opts);
  persist(*e->session);
  ++next_session_;
  Json out = e->session->to_json();
  sessions_.emplace(id, std::move(e));
  return reply(201, std::move(out));
}

HttpResponse Service::session_route(const std::string& method, const std::string& id,
                                    const std::string& rest, const std::string& body) {
  auto entry = find(id);
  if (!entry) return error_reply(404, "NotFound", "no session '" + id + "'");

  static const std::regex judgment_re(R"(/judgments/([A-Za-z0-9_-]+))");
  std::smatch m;
  const bool mutating = method == "POST" || method == "PUT" || method == "DELETE";

  if (mutating && (rest == "/judgments" || std::regex_match(rest, m, judgment_re))) {
    std::unique_lock lock(entry->mutex);
    // Work on a copy so a rejected request leaves the committed state untouched.
    Session next = *entry->session;
    const ScopeState* st = nullptr;
    std::string jid;
    if (rest == "/judgments" && method == "POST") {
      st = &next.add_judgment(json_io::parse(body));
      jid = next.judgments().back().id;
    } else if (method == "PUT" && !m.empty()) {
      jid = m[1].str();
      st = &next.revise_judgment(jid, json_io::parse(body));
    } else if (method == "DELETE" && !m.empty()) {
      jid = m[1].str();
      st = &next.delete_judgment(jid);
    } else {
      return error_reply(404, "NotFound", "no route " + method + " " + rest);
    }
    Json out = to_json(*st, next.definition().criteria);
    out["judgment"] = jid;
    out["done"] = next.done();
    persist(next);
    *entry->session = std::move(next);
    return reply(method == "POST" ? 201 : 200, std::move(out));
  }

  if (method == "POST" && rest == "/rank") {
    std::shared_lock lock(entry->mutex);
    const auto& model = entry->session->model();
    if (!model) return error_reply(409, "NoModel", "the session has no solved model yet");
    Json doc = json_io::parse(body);
    if (doc.is_object() && doc.contains("acts")) doc = doc["acts"];
    const auto acts = json_io::acts_from_json(doc);
    return reply(200, Json{{"ranking", json_io::to_json(rank(*model, acts))}});
  }

  if (method != "GET") return error_reply(404, "NotFound", "no route " + method + " " + rest);
  std::shared_lock lock(entry->mutex);
  const Session& s = *entry->session;
  if (rest.empty()) return reply(200, s.to_json());
  if (rest == "/next-question") {
    const auto q = s.next_question();
    return reply(200, q ? to_json(*q) : Json{{"done", true}});
  }
  if (rest == "/consistency") {
    Json scopes = Json::object();
    for (const auto& sc : s.scopes()) scopes[sc.scope] = to_json(sc, s.definition().criteria);
    return reply(200, Json{{"scopes", std::move(scopes)},
                           {"done", s.done()},
                           {"model_ready", s.model().has_value()}});
  }
  if (rest == "/model") {
    if (s.model()) return reply(200, json_io::to_json(*s.model()));
    Json blocking = Json::array();
    for (const auto& sc : s.scopes()) {
      if (sc.status != ScopeStatus::Consistent) {
        blocking.push_back(to_json(sc, s.definition().criteria));
      }
    }
    return error_reply(409, "ModelNotReady", "some scopes are incomplete or inconsistent",
                       Json{{"scopes", std::move(blocking)}});
  }
  return error_reply(404, "NotFound", "no route GET " + rest);
}

int Service::bind(const std::string& host, int port) {
  server_ = std::make_unique<httplib::Server>();
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  // Without SO_REUSEPORT, so a port already in use is a bind failure.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    auto r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server_->Get(".*", forward);
  server_->Post(".*", forward);
  server_->Put(".*", forward);
  server_->Delete(".*", forward);
  server_->Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool Service::listen() { return server_ && server_->listen_after_bind(); }

void Service::stop() {
  if (server_) server_->stop();
}

}  // namespace mcda
