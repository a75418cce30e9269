#pragma once

// Seeds, matrix and seed mutation, and breadth-first exchange-graph
// enumeration with seeds identified by their unordered cluster.

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "clusterkit/laurent.hpp"
#include "clusterkit/rootkit.hpp"

namespace clusterkit {

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, Index z);

struct Seed {
  std::vector<ReducedFraction> vars;
  ExchangeMatrix matrix;
  std::vector<Index> path;  // mutation directions from the root seed

  std::size_t rank() const noexcept { return vars.size(); }
};

// (u_1..u_n, b) with an empty path.
Seed initial_seed(const ExchangeMatrix& b);

// Throws LaurentViolation if the exchange relation does not divide exactly.
Seed mutate_seed(const Seed& s, Index z);

Seed mutate_along(Seed s, const std::vector<Index>& path);

using SeedKey = std::string;
SeedKey canonical_key(const Seed& s);

// Vertex with a nonnegative row (no arrow x->z, which is b[x][z] < 0) is a
// sink; nonpositive row is a source.
SinksAndSources sinks_and_sources(const ExchangeMatrix& b);

struct ExchangeGraphNode {
  SeedKey key;
  Seed seed;
  std::vector<std::size_t> neighbors;  // node index reached by mutating in each direction
};

struct ExchangeGraph {
  std::vector<ExchangeGraphNode> nodes;   // breadth-first discovery order
  std::vector<ReducedFraction> variables;  // first-discovery order
  bool truncated = false;

  std::size_t cluster_count() const noexcept { return nodes.size(); }
  std::size_t variable_count() const noexcept { return variables.size(); }
  // Node index for a key, or npos.
  std::size_t find(const SeedKey& key) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::unordered_map<SeedKey, std::size_t> index;
};

class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(ExchangeGraph partial)
      : Error(Errc::BoundExceeded, "exchange graph exceeds " + std::to_string(partial.cluster_count()) +
                                       " seeds (" + std::to_string(partial.variable_count()) +
                                       " variables so far)"),
        partial_(std::move(partial)) {}
  const ExchangeGraph& partial() const noexcept { return partial_; }

 private:
  ExchangeGraph partial_;
};

inline constexpr std::size_t kDefaultMaxSeeds = 1'000'000;

// Throws BoundExceeded (carrying the partial graph) once more than max_seeds
// distinct clusters are found.
ExchangeGraph enumerate_exchange_graph(const ExchangeMatrix& b, std::size_t max_seeds = kDefaultMaxSeeds);

}  // namespace clusterkit
