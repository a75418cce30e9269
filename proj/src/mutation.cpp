#include "clusterkit/mutation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace clusterkit {

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, Index z) {
  const std::size_t n = b.size();
  if (z >= n) throw Error(Errc::IndexOutOfRange, "mutation direction " + std::to_string(z + 1));
  auto out = ExchangeMatrix::zero(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x == z || y == z) {
        out.at(x, y) = -b(x, y);
        continue;
      }
      const std::int64_t bxz = b(x, z);
      const std::int64_t bzy = b(z, y);
      // |bxz|*bzy + bxz*|bzy| is 0 or 2*bxz*bzy, always even.
      out.at(x, y) = b(x, y) + (std::abs(bxz) * bzy + bxz * std::abs(bzy)) / 2;
    }
  }
  return out;
}

Seed initial_seed(const ExchangeMatrix& b) {
  Seed s{{}, b, {}};
  for (Index i = 0; i < b.size(); ++i) s.vars.push_back(ReducedFraction::indeterminate(b.size(), i));
  return s;
}

Seed mutate_seed(const Seed& s, Index z) {
  const std::size_t n = s.rank();
  if (z >= n) throw Error(Errc::IndexOutOfRange, "mutation direction " + std::to_string(z + 1));
  ReducedFraction positive = ReducedFraction::one(s.vars[z].nvars());
  ReducedFraction negative = positive;
  for (Index x = 0; x < n; ++x) {
    const std::int64_t e = s.matrix(x, z);
    if (e > 0) positive = positive * s.vars[x].pow(static_cast<unsigned>(e));
    if (e < 0) negative = negative * s.vars[x].pow(static_cast<unsigned>(-e));
  }
  Seed out{s.vars, mutate_matrix(s.matrix, z), s.path};
  try {
    out.vars[z] = divide_exact(positive + negative, s.vars[z]);
  } catch (const NotDivisibleError& e) {
    throw Error(Errc::LaurentViolation,
                "exchange relation at direction " + std::to_string(z + 1) + " is not Laurent (" + e.what() + ")");
  }
  out.path.push_back(z);
  return out;
}

Seed mutate_along(Seed s, const std::vector<Index>& path) {
  for (Index z : path) s = mutate_seed(s, z);
  return s;
}

SeedKey canonical_key(const Seed& s) {
  std::vector<std::string> parts;
  parts.reserve(s.rank());
  for (const auto& v : s.vars) parts.push_back(v.canonical_bytes());
  std::sort(parts.begin(), parts.end());
  SeedKey key;
  for (const auto& p : parts) {
    key += p;
    key += '#';
  }
  return key;
}

SinksAndSources sinks_and_sources(const ExchangeMatrix& b) {
  SinksAndSources out;
  for (Index x = 0; x < b.size(); ++x) {
    bool nonneg = true;
    bool nonpos = true;
    for (Index z = 0; z < b.size(); ++z) {
      if (b(x, z) < 0) nonneg = false;
      if (b(x, z) > 0) nonpos = false;
    }
    if (nonneg) out.sinks.push_back(x);
    if (nonpos) out.sources.push_back(x);
  }
  return out;
}

std::size_t ExchangeGraph::find(const SeedKey& key) const {
  auto it = index.find(key);
  return it == index.end() ? npos : it->second;
}

namespace {

// Two seeds with the same cluster must carry the same matrix up to the slot
// permutation matching their variables. Returns that permutation.
std::vector<Index> check_same_seed(const Seed& a, const Seed& b) {
  const std::size_t n = a.rank();
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) {
    auto it = std::find(b.vars.begin(), b.vars.end(), a.vars[i]);
    perm[i] = static_cast<Index>(it - b.vars.begin());
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (a.matrix(i, j) != b.matrix(perm[i], perm[j]))
        throw Error(Errc::InconsistentSeed, "same cluster reached with different exchange matrices");
  return perm;
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const ExchangeMatrix& b, std::size_t max_seeds) {
  if (max_seeds < 1) throw Error(Errc::MalformedInput, "max_seeds must be at least 1");
  const std::size_t n = b.size();
  ExchangeGraph graph;
  std::unordered_set<std::string> seen_vars;

  auto add_node = [&](Seed seed) -> std::size_t {
    if (graph.nodes.size() >= max_seeds) {
      graph.truncated = true;
      throw BoundExceeded(std::move(graph));
    }
    SeedKey key = canonical_key(seed);
    for (const auto& v : seed.vars)
      if (seen_vars.insert(v.canonical_bytes()).second) graph.variables.push_back(v);
    const std::size_t id = graph.nodes.size();
    graph.index.emplace(key, id);
    graph.nodes.push_back({std::move(key), std::move(seed), std::vector<std::size_t>(n, ExchangeGraph::npos)});
    return id;
  };

  add_node(initial_seed(b));
  for (std::size_t current = 0; current < graph.nodes.size(); ++current) {
    for (Index z = 0; z < n; ++z) {
      // Mutation is an involution, so edges back to known nodes are already filled.
      if (graph.nodes[current].neighbors[z] != ExchangeGraph::npos) continue;
      Seed next = mutate_seed(graph.nodes[current].seed, z);
      const SeedKey key = canonical_key(next);
      std::size_t id = graph.find(key);
      Index back = z;
      if (id == ExchangeGraph::npos) {
        id = add_node(std::move(next));
      } else {
        back = check_same_seed(next, graph.nodes[id].seed)[z];
      }
      graph.nodes[current].neighbors[z] = id;
      if (graph.nodes[id].neighbors[back] == ExchangeGraph::npos) graph.nodes[id].neighbors[back] = current;
    }
  }
  return graph;
}

}  // namespace clusterkit
