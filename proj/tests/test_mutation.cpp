#include <doctest.h>

#include <algorithm>
#include <random>

#include "clusterkit/mutation.hpp"

using namespace clusterkit;

namespace {

using P = IntPolynomial;

ExchangeMatrix standard_b(char family, int rank) {
  const CartanMatrix a = dynkin_cartan(family, rank);
  return exchange_matrix_from(a, Orientation::standard(a));
}

std::vector<std::string> displays(const Seed& s) {
  std::vector<std::string> out;
  for (const auto& x : s.vars) out.push_back(x.display());
  return out;
}

}  // namespace

TEST_CASE("matrix mutation") {
  CHECK(mutate_matrix(ExchangeMatrix({{0, 1}, {-1, 0}}), 0) == ExchangeMatrix({{0, -1}, {1, 0}}));
  CHECK(mutate_matrix(ExchangeMatrix({{0, 2}, {-1, 0}}), 1) == ExchangeMatrix({{0, -2}, {1, 0}}));
  CHECK(mutate_matrix(ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), 1) ==
        ExchangeMatrix({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
  CHECK_THROWS_AS(mutate_matrix(ExchangeMatrix::zero(2), 2), Error);
}

TEST_CASE("seed mutation") {
  const Seed a2 = initial_seed(ExchangeMatrix({{0, 1}, {-1, 0}}));
  CHECK(displays(a2) == std::vector<std::string>{"u1", "u2"});
  CHECK(a2.path.empty());

  const Seed s = mutate_seed(a2, 0);
  CHECK(displays(s) == std::vector<std::string>{"(u2+1)/u1", "u2"});
  CHECK(s.matrix == ExchangeMatrix({{0, -1}, {1, 0}}));
  CHECK(s.path == std::vector<Index>{0});

  const Seed back = mutate_seed(s, 0);
  CHECK(back.vars == a2.vars);
  CHECK(back.matrix == a2.matrix);

  const Seed b2 = mutate_seed(initial_seed(ExchangeMatrix({{0, 2}, {-1, 0}})), 1);
  CHECK(displays(b2) == std::vector<std::string>{"u1", "(u1^2+1)/u2"});
}

TEST_CASE("A2 pentagon") {
  const Seed a2 = initial_seed(ExchangeMatrix({{0, 1}, {-1, 0}}));
  const Seed s = mutate_along(a2, {0, 1, 0, 1, 0});
  CHECK(canonical_key(s) == canonical_key(a2));
  CHECK_FALSE(s.vars == a2.vars);
  std::vector<std::string> d = displays(s);
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::string>{"u1", "u2"});
}

TEST_CASE("canonical keys") {
  const Seed a2 = initial_seed(ExchangeMatrix({{0, 1}, {-1, 0}}));
  Seed swapped = a2;
  std::swap(swapped.vars[0], swapped.vars[1]);
  CHECK(canonical_key(swapped) == canonical_key(a2));
  CHECK(canonical_key(mutate_seed(a2, 0)) != canonical_key(a2));
  CHECK(canonical_key(mutate_along(a2, {1, 1})) == canonical_key(a2));
}

TEST_CASE("exchange relations that do not divide are reported") {
  Seed s = initial_seed(ExchangeMatrix({{0, 1}, {-1, 0}}));
  s.vars[0] = ReducedFraction::normalize(P::variable(2, 0) + P::constant(2, 1), {0, 0});
  CHECK_THROWS_WITH_AS(mutate_seed(s, 0), doctest::Contains("LaurentViolation"), Error);
  CHECK_THROWS_AS(mutate_seed(s, 5), Error);
}

TEST_CASE("sinks and sources of exchange matrices") {
  const auto ss = sinks_and_sources(ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  CHECK(ss.sinks == std::vector<Index>{0});
  CHECK(ss.sources == std::vector<Index>{2});
}

TEST_CASE("finite-type exchange graph sizes") {
  struct Case {
    char family;
    int rank;
    std::size_t clusters, variables;
  };
  for (const Case c : {Case{'A', 2, 5, 5}, {'A', 3, 14, 9}, {'A', 4, 42, 14}, {'B', 2, 6, 6}, {'B', 3, 20, 12},
                       {'C', 3, 20, 12}, {'D', 4, 50, 16}, {'G', 2, 8, 8}}) {
    CAPTURE(c.family);
    CAPTURE(c.rank);
    const ExchangeGraph g = enumerate_exchange_graph(standard_b(c.family, c.rank));
    CHECK(g.cluster_count() == c.clusters);
    CHECK(g.variable_count() == c.variables);
    CHECK_FALSE(g.truncated);
  }
}

TEST_CASE("A2 cluster variables") {
  const ExchangeGraph g = enumerate_exchange_graph(standard_b('A', 2));
  std::vector<std::string> d;
  for (const auto& x : g.variables) d.push_back(x.display());
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::string>{"(u1+1)/u2", "(u1+u2+1)/(u1*u2)", "(u2+1)/u1", "u1", "u2"});
}

TEST_CASE("exchange graph is n-regular and symmetric") {
  const ExchangeGraph g = enumerate_exchange_graph(standard_b('D', 4));
  for (std::size_t v = 0; v < g.cluster_count(); ++v) {
    const auto& node = g.nodes[v];
    REQUIRE(node.neighbors.size() == 4);
    CHECK(g.find(node.key) == v);
    for (Index z = 0; z < 4; ++z) {
      const std::size_t w = node.neighbors[z];
      REQUIRE(w < g.cluster_count());
      CHECK(w != v);
      const auto& back = g.nodes[w].neighbors;
      CHECK(std::find(back.begin(), back.end(), v) != back.end());
      CHECK(canonical_key(mutate_seed(node.seed, z)) == g.nodes[w].key);
    }
    CHECK(mutate_along(initial_seed(g.nodes[0].seed.matrix), node.seed.path).vars == node.seed.vars);
  }
  CHECK(g.find("nope") == ExchangeGraph::npos);
}

TEST_CASE("seed bound keeps the partial graph") {
  const ExchangeMatrix wild({{0, 1}, {-4, 0}});
  try {
    enumerate_exchange_graph(wild, 12);
    FAIL("expected BoundExceeded");
  } catch (const BoundExceeded& e) {
    CHECK(e.code() == Errc::BoundExceeded);
    CHECK(e.partial().truncated);
    CHECK(e.partial().cluster_count() == 12);
    CHECK(e.partial().variable_count() >= 12);
  }
  CHECK_THROWS_AS(enumerate_exchange_graph(standard_b('A', 3), 13), BoundExceeded);
  CHECK(enumerate_exchange_graph(standard_b('A', 3), 14).cluster_count() == 14);
  CHECK_THROWS_AS(enumerate_exchange_graph(standard_b('A', 3), 0), Error);
}

TEST_CASE("cyclic input is accepted and mutation-equivalent to A3") {
  // 3-cycle: 1->2->3->1
  const ExchangeMatrix b({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  const ExchangeGraph g = enumerate_exchange_graph(b);
  CHECK(g.cluster_count() == 14);
  CHECK(g.variable_count() == 9);
}

TEST_CASE("random double mutation is the identity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const ExchangeMatrix b = standard_b("ABCD"[trial % 4], 4);
    std::vector<Index> path;
    for (int i = 0; i < 6; ++i) path.push_back(rng() % 4);
    const Seed s = mutate_along(initial_seed(b), path);
    const Index z = rng() % 4;
    const Seed t = mutate_seed(mutate_seed(s, z), z);
    CHECK(t.vars == s.vars);
    CHECK(t.matrix == s.matrix);
  }
}
