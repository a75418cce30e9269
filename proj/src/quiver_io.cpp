#include "clusterkit/quiver_io.hpp"

#include <fstream>
#include <sstream>

namespace clusterkit {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedInput, what); }

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed(what + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000 || v > 1'000'000) malformed(what + " is out of range");
  return static_cast<int>(v);
}

}  // namespace

QuiverSpec parse_quiver(const json& spec) {
  if (!spec.is_object()) malformed("quiver spec must be a JSON object");
  const bool named = spec.contains("type");
  const bool explicit_cartan = spec.contains("cartan");
  if (named && explicit_cartan) malformed("give either \"type\" or \"cartan\", not both");
  if (!named && !explicit_cartan) malformed("quiver spec needs \"type\" or \"cartan\"");

  std::optional<CartanMatrix> cartan;
  if (named) {
    if (!spec["type"].is_string() || spec["type"].get<std::string>().size() != 1)
      malformed("\"type\" must be one of A-G");
    if (!spec.contains("rank")) malformed("named type needs \"rank\"");
    const char family = spec["type"].get<std::string>()[0];
    const int rank = as_int(spec["rank"], "rank");
    if (rank < 1 || rank > 64) malformed("rank must be between 1 and 64");
    cartan.emplace(dynkin_cartan(family, rank));
  } else {
    const json& rows = spec["cartan"];
    if (!rows.is_array() || rows.empty() || rows.size() > 64) malformed("\"cartan\" must be a nonempty square array");
    std::vector<std::vector<int>> a;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != rows.size()) malformed("\"cartan\" must be square");
      std::vector<int> r;
      for (const auto& v : row) r.push_back(as_int(v, "Cartan entry"));
      a.push_back(std::move(r));
    }
    cartan.emplace(std::move(a));
  }

  if (!spec.contains("orientation")) return {*cartan, Orientation::standard(*cartan)};
  const json& arrows = spec["orientation"];
  if (!arrows.is_array()) malformed("\"orientation\" must be an array of [i,j] arrows");
  std::vector<Orientation::Edge> edges;
  const int n = static_cast<int>(cartan->rank());
  for (const auto& arrow : arrows) {
    if (!arrow.is_array() || arrow.size() != 2) malformed("each arrow must be [i,j]");
    const int i = as_int(arrow[0], "arrow tail");
    const int j = as_int(arrow[1], "arrow head");
    if (i < 1 || i > n || j < 1 || j > n)
      throw Error(Errc::IndexOutOfRange, "arrow [" + std::to_string(i) + "," + std::to_string(j) + "]");
    edges.emplace_back(static_cast<Index>(i - 1), static_cast<Index>(j - 1));
  }
  return {*cartan, Orientation(*cartan, std::move(edges))};
}

QuiverSpec load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
  return parse_quiver(spec);
}

json to_json(const RootVector& v) { return v.coords(); }

json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({{"c", t.coeff.get_str()}, {"e", t.exps.values()}});
  return out;
}

json to_json(const ReducedFraction& x) {
  return {{"num", to_json(x.numerator())}, {"den", x.denominator().values()}, {"display", x.display()}};
}

json to_json(const ExchangeMatrix& b) { return b.rows(); }

IntPolynomial polynomial_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) malformed("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("c") || !t.contains("e") || !t["c"].is_string() || !t["e"].is_array())
      malformed("term must be {\"c\": string, \"e\": [int]}");
    mpz_class c;
    if (c.set_str(t["c"].get<std::string>(), 10) != 0) malformed("bad coefficient " + t["c"].dump());
    std::vector<int> e;
    for (const auto& x : t["e"]) e.push_back(as_int(x, "exponent"));
    if (e.size() != nvars) malformed("exponent vector length differs from rank");
    terms.push_back({ExponentVector(std::move(e)), c});
  }
  return IntPolynomial::from_terms(nvars, std::move(terms));
}

ReducedFraction fraction_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["den"].is_array())
    malformed("fraction must be {\"num\", \"den\"}");
  std::vector<int> den;
  for (const auto& x : j["den"]) den.push_back(as_int(x, "denominator exponent"));
  const std::size_t n = den.size();
  return ReducedFraction::normalize(polynomial_from_json(j["num"], n), ExponentVector(std::move(den)));
}

json seed_json(const Seed& s) {
  json vars = json::array();
  for (const auto& x : s.vars) vars.push_back(to_json(x));
  json path = json::array();
  for (Index z : s.path) path.push_back(z + 1);
  return {{"vars", vars}, {"matrix", to_json(s.matrix)}, {"path", path}};
}

json enumeration_json(const ExchangeGraph& g, bool with_variables) {
  json out = {{"clusters", g.cluster_count()}, {"variables", g.variable_count()}, {"truncated", g.truncated}};
  if (with_variables) {
    json list = json::array();
    for (const auto& x : g.variables) list.push_back(to_json(x));
    out["variable_list"] = list;
  }
  return out;
}

json orbit_row_json(const Thm44Row& row) {
  return {{"m", row.pos.m},
          {"k", row.pos.k + 1},
          {"variable", to_json(row.variable)},
          {"dim", to_json(row.dim)},
          {"denominator_ok", row.denominator_ok},
          {"positive_ok", row.positive_ok},
          {"content_free_ok", row.content_free_ok}};
}

json thm44_json(const Thm44Report& r) {
  json order = json::array();
  for (Index k : r.order) order.push_back(k + 1);
  json out = {{"theorem", "thm44"},
              {"type", r.type},
              {"m_range", {r.m_from, r.m_to}},
              {"order", order},
              {"rows", r.rows.size()},
              {"steps_checked", r.steps_checked},
              {"distinct_variables", r.distinct_variables},
              {"period", r.period ? json(*r.period) : json(nullptr)},
              {"failures", r.failures},
              {"passed", r.passed()}};
  return out;
}

json prop48_json(const Prop48Report& r) {
  return {{"theorem", "prop48"},
          {"type", r.type},
          {"pairing", to_string(r.pairing)},
          {"clusters_checked", r.clusters_checked},
          {"objects_checked", r.objects_checked},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

json axioms_json(const AxiomReport& r) {
  return {{"theorem", "axioms"},
          {"type", r.type},
          {"pairs_checked", r.pairs_checked},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

json dynkin_catalog() {
  json out = json::array();
  const std::vector<std::pair<char, std::vector<int>>> families = {
      {'A', {1, 2, 3, 4, 5}}, {'B', {2, 3, 4}}, {'C', {3, 4}}, {'D', {4, 5}},
      {'E', {6, 7, 8}},       {'F', {4}},       {'G', {2}}};
  for (const auto& [family, ranks] : families)
    for (int rank : ranks) {
      const CartanMatrix a = dynkin_cartan(family, rank);
      const Orientation o = Orientation::standard(a);
      json arrows = json::array();
      for (const auto& [from, to] : o.edges()) arrows.push_back({from + 1, to + 1});
      out.push_back({{"name", std::string(1, family) + std::to_string(rank)},
                     {"spec", {{"type", std::string(1, family)}, {"rank", rank}, {"orientation", arrows}}},
                     {"cartan", a.rows()},
                     {"positive_roots", a.type().positive_root_count()}});
    }
  return out;
}

}  // namespace clusterkit
