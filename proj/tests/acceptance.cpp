// One line per acceptance criterion; exit status is the number of failures.

#include <httplib.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/explorer.hpp"
#include "clusterkit/finite_type.hpp"
#include "trace_replay.hpp"

using namespace clusterkit;

namespace {

// Pinned limits.
constexpr int kWildMRange = 8;
constexpr int kOracleMMax = 8;
constexpr int kInvolutionTrials = 1000;
constexpr int kMaxRandomRank = 5;
constexpr int kMaxPathLength = 3;
constexpr std::int64_t kMaxSeedEntry = 9;
constexpr int kLaurentSequences = 200;
constexpr int kLaurentMaxLength = 12;
constexpr double kProp48A3Seconds = 60.0;
constexpr std::size_t kTraceCount = 50;

struct Fixture {
  std::string name;
  CartanMatrix cartan;
  Orientation orientation;
};

Fixture named(char family, int rank) {
  CartanMatrix a = dynkin_cartan(family, rank);
  Orientation o = Orientation::standard(a);
  return {std::string(1, family) + std::to_string(rank), std::move(a), std::move(o)};
}

const CartanMatrix kWild({{2, -1}, {-4, 2}});

std::vector<Fixture> finite_four() { return {named('A', 2), named('A', 3), named('B', 2), named('G', 2)}; }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail = why;
    pass = pass && ok;
  }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %2d  %s  %s  (%s; %.2fs)\n", number, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

Outcome enumeration_counts() {
  Outcome o;
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected = {
      {"A2", {5, 5}}, {"B2", {6, 6}}, {"A3", {9, 14}}, {"G2", {8, 8}}};
  std::string summary;
  for (const auto& f : finite_four()) {
    const ExchangeGraph g = enumerate_exchange_graph(exchange_matrix_from(f.cartan, f.orientation));
    const RootSystem roots(f.cartan);
    const auto [vars, clusters] = expected.at(f.name);
    o.require(g.variable_count() == vars, f.name + " variables " + std::to_string(g.variable_count()));
    o.require(g.cluster_count() == clusters, f.name + " clusters " + std::to_string(g.cluster_count()));
    o.require(g.variable_count() == roots.almost_positive().size(), f.name + " variables != |almost positive|");
    o.require(g.cluster_count() == count_compatible_subsets(roots), f.name + " clusters != compatible subsets");
    summary += f.name + " " + std::to_string(g.variable_count()) + "/" + std::to_string(g.cluster_count()) + " ";
  }
  if (o.pass) o.detail = summary + "matching root and compatible-subset counts";
  return o;
}

std::vector<Thm44Report> denominator_tables() {
  std::vector<Thm44Report> out;
  for (const auto& f : finite_four()) {
    const auto [lo, hi] = default_thm44_range(f.cartan, f.orientation);
    out.push_back(verify_thm44(f.cartan, f.orientation, lo, hi));
  }
  out.push_back(verify_thm44(kWild, Orientation::standard(kWild), -kWildMRange, kWildMRange));
  return out;
}

Outcome orbit_denominators(const std::vector<Thm44Report>& tables) {
  Outcome o;
  o.require(tables.size() == 5, "orbit tables could not be computed");
  std::size_t rows = 0;
  for (const auto& r : tables) {
    for (const auto& row : r.rows) {
      o.require(row.denominator_ok, r.type + " denominator at m=" + std::to_string(row.pos.m));
      o.require(row.positive_ok, r.type + " positivity at m=" + std::to_string(row.pos.m));
    }
    o.require(r.passed(), r.type + ": " + (r.failures.empty() ? "" : r.failures.front()));
    rows += r.rows.size();
  }
  const Fixture b2 = named('B', 2);
  const auto [lo, hi] = default_thm44_range(b2.cartan, b2.orientation);
  const bool reflection_flip_fails = !verify_thm44(b2.cartan, b2.orientation, lo, hi, {true, false}).passed();
  const bool exchange_flip_fails = !verify_thm44(b2.cartan, b2.orientation, lo, hi, {false, true}).passed();
  o.require(reflection_flip_fails, "transposed reflection convention still passes");
  o.require(exchange_flip_fails, "transposed exchange convention still passes");
  if (o.pass)
    o.detail = std::to_string(rows) + " rows over A2 A3 B2 G2 and wild m in [-8,8]; both convention flips fail";
  return o;
}

Outcome content_free(const std::vector<Thm44Report>& tables) {
  Outcome o;
  o.require(tables.size() == 5, "orbit tables could not be computed");
  std::size_t rows = 0;
  for (const auto& r : tables)
    for (const auto& row : r.rows) {
      o.require(row.content_free_ok && row.variable.is_content_free(),
                r.type + " numerator divisible by some u_i at m=" + std::to_string(row.pos.m));
      ++rows;
    }
  if (o.pass) o.detail = std::to_string(rows) + " numerators free of every u_i";
  return o;
}

// Acyclic B with D*B skew-symmetric for a random D with entries in {1,2,3}.
std::pair<ExchangeMatrix, std::vector<std::int64_t>> random_acyclic(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % kMaxRandomRank;
  std::vector<std::int64_t> d(n);
  for (auto& x : d) x = 1 + rng() % 3;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  auto b = ExchangeMatrix::zero(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      if (rng() % 10 < 4) continue;
      const std::size_t i = order[s], j = order[t];
      const std::int64_t g = std::gcd(d[i], d[j]);
      // i before j in the order: arrows only point forward, so no cycles.
      b.at(i, j) = d[j] / g;
      b.at(j, i) = -d[i] / g;
    }
  return {b, d};
}

Outcome involution() {
  Outcome o;
  std::mt19937 rng(20261014);
  int done = 0, redrawn = 0;
  for (int trial = 0; trial < kInvolutionTrials; ++trial) {
    const auto [b, d] = random_acyclic(rng);
    o.require(b.is_skew_symmetrized_by(d), "generator produced a matrix D does not symmetrize");
    // Outside finite type a few mutations can push entries of B past 80, and
    // u^81-sized exchange monomials are not desk scale; redraw those paths.
    Seed s = initial_seed(b);
    for (;;) {
      std::vector<Index> path(rng() % (kMaxPathLength + 1));
      for (auto& z : path) z = rng() % b.size();
      s = mutate_along(initial_seed(b), path);
      std::int64_t biggest = 0;
      for (const auto& row : s.matrix.rows())
        for (auto v : row) biggest = std::max(biggest, std::abs(v));
      if (biggest <= kMaxSeedEntry) break;
      ++redrawn;
    }
    const Index z = rng() % b.size();
    const Seed once = mutate_seed(s, z);
    const Seed twice = mutate_seed(once, z);
    o.require(twice.vars == s.vars, "variables differ after double mutation");
    o.require(twice.matrix == s.matrix, "matrix differs after double mutation");
    o.require(mutate_matrix(mutate_matrix(s.matrix, z), z) == s.matrix, "matrix involution");
    o.require(once.matrix.is_skew_symmetrized_by(d), "symmetrizer not preserved");
    ++done;
  }
  if (o.pass) o.detail = std::to_string(done) + " random (seed, direction) pairs, rank <= 5, " +
               std::to_string(redrawn) + " oversized paths redrawn";
  return o;
}

Outcome laurent() {
  Outcome o;
  std::mt19937 rng(7357);
  std::vector<std::pair<ExchangeMatrix, std::set<std::string>>> pool;
  for (const auto& [family, rank] : std::vector<std::pair<char, int>>{
           {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    const CartanMatrix a = dynkin_cartan(family, rank);
    for (const Orientation& q : {Orientation::standard(a), reflect_orientation(Orientation::standard(a), 0)}) {
      const ExchangeMatrix b = exchange_matrix_from(a, q);
      std::set<std::string> known;
      for (const auto& x : enumerate_exchange_graph(b).variables) known.insert(x.canonical_bytes());
      pool.emplace_back(b, std::move(known));
    }
  }
  std::size_t steps = 0;
  for (int seq = 0; seq < kLaurentSequences; ++seq) {
    const auto& [b, known] = pool[rng() % pool.size()];
    Seed s = initial_seed(b);
    const int length = 1 + static_cast<int>(rng() % kLaurentMaxLength);
    for (int i = 0; i < length; ++i) {
      const Index z = rng() % b.size();
      try {
        s = mutate_seed(s, z);
      } catch (const Error& e) {
        o.require(false, std::string("exchange division failed: ") + e.what());
        break;
      }
      ++steps;
      const auto& x = s.vars[z];
      o.require(x.is_good_reduced_form(), "not positive over a monomial: " + x.display());
      o.require(x.is_content_free(), "numerator not content-free: " + x.display());
      o.require(known.contains(x.canonical_bytes()), "not among the enumerated cluster variables: " + x.display());
    }
  }
  if (o.pass) o.detail = std::to_string(kLaurentSequences) + " sequences, " + std::to_string(steps) + " exact exchanges";
  return o;
}

Outcome axioms() {
  Outcome o;
  std::size_t pairs = 0;
  for (char family : {'A', 'B', 'G'}) {
    const int rank = family == 'A' ? 3 : 2;
    const AxiomReport r = verify_compatibility_axioms(RootSystem(dynkin_cartan(family, rank)));
    o.require(r.passed(), r.type + ": " + (r.failures.empty() ? "" : r.failures.front()));
    pairs += r.pairs_checked;
  }
  const CartanMatrix b2 = dynkin_cartan('B', 2);
  const auto forward = compatibility_degree(b2, {1, 0}, {0, 1});
  const auto backward = compatibility_degree(b2, {0, 1}, {1, 0});
  o.require(forward != backward, "B2 degree is symmetric");
  if (o.pass)
    o.detail = std::to_string(pairs) + " ordered pairs over A3 B2 G2; B2 (a1||a2)=" + std::to_string(forward) +
               " vs (a2||a1)=" + std::to_string(backward);
  return o;
}

Outcome cluster_denominators() {
  Outcome o;
  const CalibrationResult cal = calibrate_pairing();
  o.require(cal.chosen == kCalibratedPairing, "calibration disagrees with the frozen constant");
  std::string summary = "pairing " + to_string(cal.chosen) + ";";
  double a3_seconds = 0;
  for (const auto& f : {named('A', 2), named('B', 2), named('A', 3)}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Prop48Report r = verify_prop48(f.cartan, f.orientation, cal.chosen);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (f.name == "A3") a3_seconds = secs;
    const std::size_t objects = RootSystem(f.cartan).almost_positive().size();
    o.require(r.passed(), f.name + ": " + (r.failures.empty() ? "" : r.failures.front()));
    o.require(r.objects_checked == r.clusters_checked * objects, f.name + " did not check every object");
    summary += " " + f.name + " " + std::to_string(r.clusters_checked) + "x" + std::to_string(objects);
  }
  o.require(a3_seconds < kProp48A3Seconds, "A3 took too long");
  if (o.pass) o.detail = summary;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t compared = 0;
  auto fixtures = finite_four();
  fixtures.push_back({"wild", kWild, Orientation::standard(kWild)});
  for (const auto& f : fixtures) {
    const auto order = admissible_sink_sequence(f.orientation);
    for (const auto& [pos, d] : ar_recursion_oracle(f.cartan, order, kOracleMMax)) {
      o.require(d == preprojective_dim_vector(f.cartan, order, pos.m, pos.k),
                f.name + " disagrees at m=" + std::to_string(pos.m));
      ++compared;
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " positions, m <= 8";
  return o;
}

Outcome periodicity() {
  Outcome o;
  std::string summary;
  for (const auto& f : finite_four()) {
    const auto order = admissible_sink_sequence(f.orientation);
    const std::size_t n = f.cartan.rank();
    const auto whole = coxeter_period(f.cartan, order);
    o.require(whole.has_value(), f.name + " has no period");
    if (!whole) continue;
    const CoxeterOrbit orbit = coxeter_orbit(f.cartan, order, 0, *whole);
    summary += f.name + " p=(";
    for (Index k = 0; k < n; ++k) {
      const auto pk = dim_orbit_period(f.cartan, order, k, 2 * *whole);
      o.require(pk.has_value(), f.name + " dimension orbit has no period");
      if (!pk) continue;
      o.require(orbit.vars.at({*pk, k}) == ReducedFraction::indeterminate(n, k),
                f.name + " T^p(u_k) != u_k for k=" + std::to_string(k + 1));
      if (f.name == "A2") o.require(*pk == 5, "A2 period is not 5");
      summary += (k ? "," : "") + std::to_string(*pk);
    }
    summary += ") ";
  }
  if (o.pass) o.detail = summary + "T^p(u_k) = u_k";
  return o;
}

Outcome service_traces(const std::string& path) {
  Outcome o;
  SessionStore store;
  ExplorerServer server(store);
  const int port = server.bind(0);
  std::thread loop([&] { server.run(); });
  httplib::Client client("127.0.0.1", port);
  for (int i = 0; i < 200 && !client.Get("/catalog/dynkin"); ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(10));

  const auto summary = testing::replay_traces(
      testing::load_traces(path), [&](const std::string& m, const std::string& p, const std::string& b) {
        auto res = m == "GET" ? client.Get(p) : client.Post(p, b, "application/json");
        if (!res) return std::pair{-1, std::string("{}")};
        return std::pair{res->status, res->body};
      });
  server.stop();
  loop.join();
  o.require(summary.traces == kTraceCount, std::to_string(summary.traces) + " traces found");
  o.require(summary.mismatches.empty(), summary.mismatches.empty() ? "" : summary.mismatches.front());
  if (o.pass)
    o.detail = std::to_string(summary.traces) + " traces, " + std::to_string(summary.requests) +
               " HTTP requests, " + std::to_string(summary.views_compared) + " seed views byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string traces = argc > 1 ? argv[1] : std::string(CLUSTERKIT_TEST_DATA) + "/traces.json";
  report(1, "finite-type enumeration counts", enumeration_counts);
  std::vector<Thm44Report> tables;
  try {
    tables = denominator_tables();
  } catch (const std::exception& e) {
    std::printf("orbit tables: %s\n", e.what());
  }
  report(2, "Coxeter orbit denominators and conventions", [&] { return orbit_denominators(tables); });
  report(3, "content-free numerators", [&] { return content_free(tables); });
  report(4, "mutation involution and symmetrizer", involution);
  report(5, "Laurent phenomenon along random sequences", laurent);
  report(6, "compatibility degree axioms", axioms);
  report(7, "denominators with respect to every cluster", cluster_denominators);
  report(8, "sigma_hat orbit vs AR recursion oracle", oracle_equivalence);
  report(9, "finite-type periodicity", periodicity);
  report(10, "service traces vs library replay", [&] { return service_traces(traces); });
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
