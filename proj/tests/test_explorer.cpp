#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "clusterkit/explorer.hpp"
#include "trace_replay.hpp"

using namespace clusterkit;

namespace {

const std::string kData = CLUSTERKIT_TEST_DATA;
const json kA2 = json::parse(R"({"type": "A", "rank": 2, "orientation": [[2, 1]]})");

std::vector<std::string> displays(const json& view) {
  std::vector<std::string> out;
  for (const auto& v : view["vars"]) out.push_back(v["display"]);
  return out;
}

std::string id_of(const ApiResponse& r) { return r.body["id"]; }

// Runs an ExplorerServer on an ephemeral port for the lifetime of the object.
struct LiveServer {
  SessionStore store;
  ExplorerServer server{store};
  int port = server.bind(0);
  std::thread thread{[this] { server.run(); }};

  LiveServer() {
    httplib::Client probe("127.0.0.1", port);
    for (int i = 0; i < 200 && !probe.Get("/catalog/dynkin"); ++i)
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
};

}  // namespace

TEST_CASE("session lifecycle") {
  SessionStore store;
  const ApiResponse created = store.create(kA2);
  CHECK(created.status == 201);
  CHECK(displays(created.body) == std::vector<std::string>{"u1", "u2"});
  CHECK(created.body["sinks"] == json::parse("[1]"));
  CHECK(created.body["sources"] == json::parse("[2]"));
  const std::string id = id_of(created);
  CHECK(id.size() == 32);

  ApiResponse r = store.mutate(id, {{"k", 1}});
  CHECK(r.status == 200);
  CHECK(displays(r.body)[0] == "(u2+1)/u1");
  CHECK(r.body["changed"] == json::parse("[1]"));
  CHECK(r.body["new_denominator"] == json::parse("[1,0]"));

  r = store.mutate(id, {{"k", 1}});
  CHECK(displays(r.body) == std::vector<std::string>{"u1", "u2"});
  CHECK(r.body["history"].size() == 2);

  CHECK(store.mutate(id, {{"k", 99}}).status == 400);
  CHECK(store.mutate(id, {{"k", 0}}).status == 400);
  CHECK(store.mutate(id, {{"k", "1"}}).status == 400);
  CHECK(store.mutate(id, json::array()).status == 400);
  CHECK(store.mutate("nope", {{"k", 1}}).status == 404);

  r = store.undo(id);
  CHECK(r.status == 200);
  CHECK(r.body["history"] == json::parse("[1]"));
  CHECK(displays(r.body)[0] == "(u2+1)/u1");
  r = store.undo(id);
  CHECK(displays(r.body) == std::vector<std::string>{"u1", "u2"});
  CHECK(store.undo(id).status == 409);
  CHECK(store.undo("nope").status == 404);

  for (int k : {1, 2, 1}) store.mutate(id, {{"k", k}});
  r = store.get(id);
  CHECK(r.status == 200);
  CHECK(r.body["history"] == json::parse("[1,2,1]"));
  const QuiverSpec q = parse_quiver(kA2);
  const Seed replay = mutate_along(initial_seed(exchange_matrix_from(q.cartan, q.orientation)), {0, 1, 0});
  CHECK(testing::view_bytes(r.body) == seed_view(replay, {0, 1, 0}).dump());
}

TEST_CASE("session creation errors") {
  SessionStore store;
  const ApiResponse b2 = store.create(json::parse(R"({"type": "B", "rank": 2, "orientation": [[2, 1]]})"));
  CHECK(b2.status == 201);
  CHECK(b2.body["matrix"] == json::parse("[[0,2],[-1,0]]"));
  CHECK(store.create(json::parse(R"({"cartan": [[2,-1,-1],[-1,2,-1],[-1,-1,2]],
                                     "orientation": [[1,2],[2,3],[3,1]]})"))
            .status == 422);
  CHECK(store.create(json::parse(R"({"type": "A"})")).status == 400);
  CHECK(store.create(json::parse(R"({"type": "A", "rank": 2, "cartan": [[2,-1],[-1,2]]})")).status == 400);
  CHECK(store.size() == 1);
}

TEST_CASE("router") {
  SessionStore store;
  CHECK(store.handle("GET", "/catalog/dynkin", "").body["types"].size() == 17);
  const ApiResponse c = store.handle("POST", "/session", kA2.dump());
  CHECK(c.status == 201);
  const std::string id = id_of(c);
  CHECK(store.handle("POST", "/session/" + id + "/mutate", R"({"k": 2})").status == 200);
  CHECK(store.handle("GET", "/session/" + id, "").body["history"] == json::parse("[2]"));
  CHECK(store.handle("POST", "/session/" + id + "/undo", "").status == 200);
  CHECK(store.handle("POST", "/session", "{not json").status == 400);
  CHECK(store.handle("POST", "/session/" + id + "/mutate", "{").status == 400);
  CHECK(store.handle("DELETE", "/session/" + id, "").status == 404);
  CHECK(store.handle("GET", "/elsewhere", "").status == 404);
}

TEST_CASE("least recently used sessions are evicted") {
  SessionStore store(2);
  const std::string a = id_of(store.create(kA2));
  const std::string b = id_of(store.create(kA2));
  CHECK(store.get(a).status == 200);
  const std::string c = id_of(store.create(kA2));
  CHECK(store.size() == 2);
  CHECK(store.get(b).status == 404);
  CHECK(store.get(a).status == 200);
  CHECK(store.get(c).status == 200);
}

TEST_CASE("idle sessions expire") {
  SessionStore store(8, std::chrono::seconds(0));
  const std::string a = id_of(store.create(kA2));
  std::this_thread::sleep_for(std::chrono::milliseconds(5));
  CHECK(store.get(a).status == 404);
  CHECK(store.size() == 0);
}

TEST_CASE("concurrent mutations on one session serialize") {
  SessionStore store;
  const json d4 = json::parse(R"({"type": "D", "rank": 4})");
  const std::string id = id_of(store.create(d4));
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      for (int i = 0; i < 25; ++i) store.mutate(id, {{"k", 1 + (t + i) % 4}});
      store.create(kA2);
    });
  for (auto& w : workers) w.join();
  const ApiResponse r = store.get(id);
  REQUIRE(r.body["history"].size() == 200);
  std::vector<Index> history;
  for (const auto& k : r.body["history"]) history.push_back(k.get<Index>() - 1);
  const QuiverSpec q = parse_quiver(d4);
  const Seed replay = mutate_along(initial_seed(exchange_matrix_from(q.cartan, q.orientation)), history);
  CHECK(testing::view_bytes(r.body) == seed_view(replay, history).dump());
  CHECK(store.size() == 9);
}

TEST_CASE("recorded traces replay identically in process") {
  SessionStore store;
  const auto summary = testing::replay_traces(
      testing::load_traces(kData + "/traces.json"),
      [&](const std::string& m, const std::string& p, const std::string& b) {
        const ApiResponse r = store.handle(m, p, b);
        return std::pair{r.status, r.body.dump()};
      });
  CHECK(summary.traces == 50);
  CHECK(summary.mismatches.empty());
  for (const auto& m : summary.mismatches) MESSAGE(m);
}

TEST_CASE("HTTP round trip") {
  LiveServer live;
  httplib::Client client("127.0.0.1", live.port);

  auto index = client.Get("/");
  REQUIRE(index);
  CHECK(index->status == 200);
  CHECK(index->body.find("<html") != std::string::npos);
  CHECK(index->get_header_value("Content-Type").find("text/html") == 0);

  auto catalog = client.Get("/catalog/dynkin");
  REQUIRE(catalog);
  CHECK(json::parse(catalog->body)["types"].size() == 17);

  auto created = client.Post("/session", kA2.dump(), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = json::parse(created->body)["id"];

  auto mutated = client.Post("/session/" + id + "/mutate", R"({"k": 1})", "application/json");
  REQUIRE(mutated);
  CHECK(displays(json::parse(mutated->body))[0] == "(u2+1)/u1");
  auto bad = client.Post("/session/" + id + "/mutate", R"({"k": 99})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  auto undone = client.Post("/session/" + id + "/undo", "", "application/json");
  REQUIRE(undone);
  CHECK(undone->status == 200);
  auto again = client.Post("/session/" + id + "/undo", "", "application/json");
  REQUIRE(again);
  CHECK(again->status == 409);
  auto missing = client.Get("/session/0000");
  REQUIRE(missing);
  CHECK(missing->status == 404);
}

TEST_CASE("static directory is served at the root") {
  SessionStore store;
  ExplorerServer server(store, kData + "/static");
  const int port = server.bind(0);
  std::thread t([&] { server.run(); });
  httplib::Client client("127.0.0.1", port);
  httplib::Result page;
  for (int i = 0; i < 200 && !(page = client.Get("/index.html")); ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  REQUIRE(page);
  CHECK(page->status == 200);
  CHECK(page->body.find("static explorer fixture") != std::string::npos);
  auto api = client.Get("/catalog/dynkin");
  REQUIRE(api);
  CHECK(api->status == 200);
  server.stop();
  t.join();
}
