#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "mcda/session.hpp"

namespace httplib {
class Server;
}

namespace mcda {

struct ServiceOptions {
  std::filesystem::path state_dir;
  bool sparse = false;  ///< questioning mode for new sessions
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

/// Versioned JSON API over elicitation sessions, persisted as one document per
/// session under the state directory. Requests on different sessions run
/// concurrently; mutations of one session are serialized.
class Service {
 public:
  /// Loads every session document found in the state directory.
  explicit Service(ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Routes one request; the HTTP server forwards everything here.
  HttpResponse handle(const std::string& method, const std::string& path,
                      const std::string& body);

  /// Binds the listener; port 0 lets the OS choose. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(); requires a successful bind().
  bool listen();
  void stop();

  std::size_t session_count() const;
  std::filesystem::path session_path(const std::string& id) const;

 private:
  struct Entry {
    std::shared_mutex mutex;
    std::unique_ptr<Session> session;
  };
  std::shared_ptr<Entry> find(const std::string& id) const;
  void persist(const Session& s) const;

  HttpResponse create_session(const std::string& body);
  HttpResponse session_route(const std::string& method, const std::string& id,
                             const std::string& rest, const std::string& body);

  ServiceOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::size_t next_session_ = 1;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace mcda
