#include "clusterkit/explorer.hpp"

#include <httplib.h>

#include <iomanip>
#include <random>
#include <sstream>

namespace clusterkit {

namespace {

ApiResponse error_reply(int status, const std::string& message) { return {status, {{"error", message}}}; }

json one_based(const std::vector<Index>& v) {
  json out = json::array();
  for (Index i : v) out.push_back(i + 1);
  return out;
}

json view_with_change(const Session& s, const Seed& before, std::optional<Index> slot) {
  json view = seed_view(s.current, s.history);
  view["id"] = s.id;
  json changed = json::array();
  for (Index i = 0; i < before.rank(); ++i)
    if (!(before.vars[i] == s.current.vars[i])) changed.push_back(i + 1);
  view["changed"] = changed;
  view["new_denominator"] = slot ? json(s.current.vars[*slot].denominator().values()) : json(nullptr);
  return view;
}

}  // namespace

json seed_view(const Seed& seed, const std::vector<Index>& history) {
  json vars = json::array();
  for (const auto& x : seed.vars) vars.push_back(to_json(x));
  const auto ss = sinks_and_sources(seed.matrix);
  return {{"vars", vars},
          {"matrix", to_json(seed.matrix)},
          {"sinks", one_based(ss.sinks)},
          {"sources", one_based(ss.sources)},
          {"history", one_based(history)}};
}

SessionStore::SessionStore(std::size_t capacity, std::chrono::seconds ttl)
    : capacity_(std::max<std::size_t>(capacity, 1)), ttl_(ttl) {}

std::size_t SessionStore::size() const {
  std::lock_guard guard(mutex_);
  return by_id_.size();
}

std::string SessionStore::fresh_id() {
  static thread_local std::random_device device;
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (int word = 0; word < 4; ++word) out << std::setw(8) << static_cast<std::uint32_t>(device());
  return out.str();
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::lock_guard guard(mutex_);
  const auto now = std::chrono::steady_clock::now();
  while (!lru_.empty() && now - lru_.back().second > ttl_) {
    by_id_.erase(lru_.back().first->id);
    lru_.pop_back();
  }
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return nullptr;
  it->second->second = now;
  lru_.splice(lru_.begin(), lru_, it->second);
  return lru_.front().first;
}

ApiResponse SessionStore::create(const json& spec) {
  std::optional<QuiverSpec> quiver;
  try {
    quiver.emplace(parse_quiver(spec));
  } catch (const Error& e) {
    return error_reply(400, e.what());
  }
  if (!quiver->orientation.is_acyclic()) return error_reply(422, "orientation has a directed cycle");

  auto session =
      std::make_shared<Session>(spec, initial_seed(exchange_matrix_from(quiver->cartan, quiver->orientation)));
  {
    std::lock_guard guard(mutex_);
    do session->id = fresh_id();
    while (by_id_.contains(session->id));
    lru_.emplace_front(session, session->created);
    by_id_.emplace(session->id, lru_.begin());
    while (lru_.size() > capacity_) {
      by_id_.erase(lru_.back().first->id);
      lru_.pop_back();
    }
  }
  std::lock_guard guard(session->lock);
  return {201, view_with_change(*session, session->current, std::nullopt)};
}

ApiResponse SessionStore::get(const std::string& id) {
  auto session = find(id);
  if (!session) return error_reply(404, "unknown session");
  std::lock_guard guard(session->lock);
  return {200, view_with_change(*session, session->current, std::nullopt)};
}

ApiResponse SessionStore::mutate(const std::string& id, const json& body) {
  auto session = find(id);
  if (!session) return error_reply(404, "unknown session");
  if (!body.is_object() || !body.contains("k") || !body["k"].is_number_integer())
    return error_reply(400, "body must be {\"k\": int}");
  std::lock_guard guard(session->lock);
  const auto k = body["k"].get<std::int64_t>();
  if (k < 1 || k > static_cast<std::int64_t>(session->current.rank()))
    return error_reply(400, "k must be between 1 and " + std::to_string(session->current.rank()));
  const Index z = static_cast<Index>(k - 1);
  const Seed before = session->current;
  try {
    session->current = mutate_seed(before, z);
  } catch (const Error& e) {
    return error_reply(500, e.what());
  }
  session->history.push_back(z);
#ifndef NDEBUG
  if (!(mutate_along(session->root, session->history).vars == session->current.vars))
    return error_reply(500, "replay invariant broken");
#endif
  return {200, view_with_change(*session, before, z)};
}

ApiResponse SessionStore::undo(const std::string& id) {
  auto session = find(id);
  if (!session) return error_reply(404, "unknown session");
  std::lock_guard guard(session->lock);
  if (session->history.empty()) return error_reply(409, "nothing to undo");
  const Index z = session->history.back();
  const Seed before = session->current;
  session->current = mutate_seed(before, z);
  // The path records directions applied; undo removes the pair.
  session->current.path.resize(session->current.path.size() - 2);
  session->history.pop_back();
  return {200, view_with_change(*session, before, z)};
}

ApiResponse SessionStore::catalog() { return {200, {{"types", dynkin_catalog()}}}; }

ApiResponse SessionStore::handle(const std::string& method, const std::string& path, const std::string& body) {
  auto parse_body = [&](json& out) {
    if (body.empty()) {
      out = json::object();
      return true;
    }
    try {
      out = json::parse(body);
      return true;
    } catch (const json::parse_error&) {
      return false;
    }
  };
  if (method == "GET" && path == "/catalog/dynkin") return catalog();
  if (method == "POST" && path == "/session") {
    json spec;
    if (!parse_body(spec)) return error_reply(400, "request body is not JSON");
    return create(spec);
  }
  const std::string prefix = "/session/";
  if (path.rfind(prefix, 0) == 0) {
    const std::string rest = path.substr(prefix.size());
    const auto slash = rest.find('/');
    const std::string id = rest.substr(0, slash);
    const std::string action = slash == std::string::npos ? "" : rest.substr(slash + 1);
    if (method == "GET" && action.empty()) return get(id);
    if (method == "POST" && action == "mutate") {
      json b;
      if (!parse_body(b)) return error_reply(400, "request body is not JSON");
      return mutate(id, b);
    }
    if (method == "POST" && action == "undo") return undo(id);
  }
  return error_reply(404, "no route for " + method + " " + path);
}

const std::string& builtin_index_html() {
  static const std::string page = R"html(<!doctype html>
<html><head><meta charset="utf-8"><title>clusterkit explorer</title>
<style>
body{font-family:sans-serif;margin:2em}
.var{display:inline-block;border:1px solid #999;padding:.4em .8em;margin:.2em;border-radius:4px;cursor:pointer}
.var.changed{background:#ffe9a8}
pre{background:#f4f4f4;padding:.5em}
</style></head>
<body>
<h1>Mutation explorer</h1>
<p><select id="type"></select> <button id="start">new session</button> <button id="undo">undo</button></p>
<div id="vars"></div>
<p>history: <span id="history"></span></p>
<pre id="matrix"></pre>
<p id="error" style="color:#b00"></p>
<script>
let id = null, busy = Promise.resolve();
const $ = (x) => document.getElementById(x);
async function call(method, path, body) {
  const r = await fetch(path, {method, headers: {"Content-Type": "application/json"},
                               body: body === undefined ? undefined : JSON.stringify(body)});
  const j = await r.json();
  if (!r.ok) throw new Error(j.error || r.status);
  return j;
}
function render(v) {
  $("error").textContent = "";
  $("vars").innerHTML = "";
  v.vars.forEach((x, i) => {
    const d = document.createElement("span");
    d.className = "var" + ((v.changed || []).includes(i + 1) ? " changed" : "");
    d.textContent = (i + 1) + ": " + x.display + "  den " + JSON.stringify(x.den);
    d.onclick = () => queue(() => call("POST", "/session/" + id + "/mutate", {k: i + 1}));
    $("vars").appendChild(d);
  });
  $("history").textContent = v.history.join(", ");
  $("matrix").textContent = v.matrix.map((r) => r.join("\t")).join("\n") +
      "\nsinks " + v.sinks.join(",") + "  sources " + v.sources.join(",");
}
function queue(f) {
  busy = busy.then(f).then(render).catch((e) => { $("error").textContent = e.message; });
}
call("GET", "/catalog/dynkin").then((c) => {
  c.types.forEach((t) => {
    const o = document.createElement("option");
    o.value = JSON.stringify(t.spec); o.textContent = t.name; $("type").appendChild(o);
  });
});
$("start").onclick = () => queue(async () => { const v = await call("POST", "/session", JSON.parse($("type").value)); id = v.id; return v; });
$("undo").onclick = () => queue(() => call("POST", "/session/" + id + "/undo"));
</script>
</body></html>
)html";
  return page;
}

struct ExplorerServer::Impl {
  httplib::Server server;
  int port = -1;
};

ExplorerServer::ExplorerServer(SessionStore& store, std::string static_dir) : impl_(std::make_unique<Impl>()) {
  auto& svr = impl_->server;
  auto forward = [&store](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse reply = store.handle(req.method, req.path, req.body);
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  svr.Get("/catalog/dynkin", forward);
  svr.Get(R"(/session/[^/]+)", forward);
  svr.Post("/session", forward);
  svr.Post(R"(/session/[^/]+/(mutate|undo))", forward);
  if (static_dir.empty() || !svr.set_mount_point("/", static_dir)) {
    svr.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(builtin_index_html(), "text/html; charset=utf-8");
    });
  }
}

ExplorerServer::~ExplorerServer() { stop(); }

int ExplorerServer::bind(int port) {
  auto& svr = impl_->server;
  if (port == 0) {
    impl_->port = svr.bind_to_any_port("127.0.0.1");
  } else {
    impl_->port = svr.bind_to_port("127.0.0.1", port) ? port : -1;
  }
  if (impl_->port < 0) throw Error(Errc::MalformedInput, "cannot bind 127.0.0.1:" + std::to_string(port));
  return impl_->port;
}

void ExplorerServer::run() { impl_->server.listen_after_bind(); }

void ExplorerServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace clusterkit
