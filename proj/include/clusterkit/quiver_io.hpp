#pragma once

// JSON ingestion of quivers and JSON rendering of library results. Vertices
// are 1-based on this side of the boundary.

#include <string>

#include <json.hpp>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/finite_type.hpp"
#include "clusterkit/laurent.hpp"
#include "clusterkit/mutation.hpp"
#include "clusterkit/rootkit.hpp"

namespace clusterkit {

using json = nlohmann::json;

struct QuiverSpec {
  CartanMatrix cartan;
  Orientation orientation;
};

// {"type": "B", "rank": 2, "orientation": [[2,1]]} or
// {"cartan": [[2,-1],[-2,2]], "orientation": [[2,1]]}. Without
// "orientation" every edge points from the larger to the smaller vertex.
QuiverSpec parse_quiver(const json& spec);
QuiverSpec load_quiver_file(const std::string& path);

json to_json(const RootVector& v);
json to_json(const IntPolynomial& p);
json to_json(const ReducedFraction& x);
json to_json(const ExchangeMatrix& b);
IntPolynomial polynomial_from_json(const json& j, std::size_t nvars);
ReducedFraction fraction_from_json(const json& j);

json seed_json(const Seed& s);
json enumeration_json(const ExchangeGraph& g, bool with_variables = true);
json orbit_row_json(const Thm44Row& row);
json thm44_json(const Thm44Report& r);
json prop48_json(const Prop48Report& r);
json axioms_json(const AxiomReport& r);

// Named templates for the explorer: every Dynkin family at small rank.
json dynkin_catalog();

}  // namespace clusterkit
