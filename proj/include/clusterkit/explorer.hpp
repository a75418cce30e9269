#pragma once

// In-memory mutation sessions behind a small JSON API. The router is plain
// function calls so traces can be replayed without a socket; serve() binds
// it to HTTP on localhost.

#include <chrono>
#include <cstddef>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "clusterkit/mutation.hpp"
#include "clusterkit/quiver_io.hpp"

namespace clusterkit {

struct Session {
  Session(json spec_in, Seed root_in)
      : spec(std::move(spec_in)), root(root_in), current(std::move(root_in)),
        created(std::chrono::steady_clock::now()) {}

  std::string id;
  json spec;
  Seed root;
  Seed current;
  std::vector<Index> history;
  std::chrono::steady_clock::time_point created;
  std::mutex lock;
};

struct ApiResponse {
  int status;
  json body;
};

// Seed view: vars (display, num, den), matrix, sinks, sources, history,
// all vertex numbers 1-based.
json seed_view(const Seed& seed, const std::vector<Index>& history);

class SessionStore {
 public:
  static constexpr std::size_t kDefaultCapacity = 256;
  static constexpr std::chrono::seconds kDefaultTtl{3600};

  explicit SessionStore(std::size_t capacity = kDefaultCapacity, std::chrono::seconds ttl = kDefaultTtl);

  ApiResponse create(const json& spec);
  ApiResponse get(const std::string& id);
  ApiResponse mutate(const std::string& id, const json& body);
  ApiResponse undo(const std::string& id);
  static ApiResponse catalog();

  // Routes "METHOD /path" with a raw request body.
  ApiResponse handle(const std::string& method, const std::string& path, const std::string& body);

  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id);
  std::string fresh_id();

  mutable std::mutex mutex_;
  std::size_t capacity_;
  std::chrono::seconds ttl_;
  // Most recently used first.
  std::list<std::pair<std::shared_ptr<Session>, std::chrono::steady_clock::time_point>> lru_;
  std::unordered_map<std::string, decltype(lru_)::iterator> by_id_;
};

// Minimal page at "/" when no static directory is given.
const std::string& builtin_index_html();

// HTTP front end bound to 127.0.0.1. Serves static_dir at "/" when nonempty.
class ExplorerServer {
 public:
  explicit ExplorerServer(SessionStore& store, std::string static_dir = {});
  ~ExplorerServer();
  ExplorerServer(const ExplorerServer&) = delete;
  ExplorerServer& operator=(const ExplorerServer&) = delete;

  // Port 0 picks a free port; returns the bound one.
  int bind(int port);
  void run();  // blocks until stop()
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

inline constexpr int kDefaultPort = 7357;

}  // namespace clusterkit
