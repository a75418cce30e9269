#include "clusterkit/rootkit.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace clusterkit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::NotGeneralizedCartan: return "NotGeneralizedCartan";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    case Errc::NotAlmostPositive: return "NotAlmostPositive";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::InfiniteType: return "InfiniteType";
    case Errc::ReductionDidNotTerminate: return "ReductionDidNotTerminate";
    case Errc::InvalidOrientation: return "InvalidOrientation";
    case Errc::NotSinkOrSource: return "NotSinkOrSource";
    case Errc::CyclicOrientation: return "CyclicOrientation";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroNumerator: return "ZeroNumerator";
    case Errc::LaurentViolation: return "LaurentViolation";
    case Errc::InconsistentSeed: return "InconsistentSeed";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::PathInvalid: return "PathInvalid";
    case Errc::WindowInconsistent: return "WindowInconsistent";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- RootVector

RootVector RootVector::simple(std::size_t n, Index i) {
  RootVector v(n);
  v.coords_.at(i) = 1;
  return v;
}

RootVector RootVector::negative_simple(std::size_t n, Index i) {
  RootVector v(n);
  v.coords_.at(i) = -1;
  return v;
}

bool RootVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool RootVector::is_positive() const noexcept {
  return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

std::optional<Index> RootVector::negative_simple_index() const noexcept {
  std::optional<Index> found;
  for (Index i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (coords_[i] != -1 || found) return std::nullopt;
    found = i;
  }
  return found;
}

std::int64_t RootVector::height() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

RootVector& RootVector::operator+=(const RootVector& other) {
  for (Index i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_.at(i);
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& other) {
  for (Index i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_.at(i);
  return *this;
}

RootVector operator*(std::int64_t s, RootVector v) {
  for (auto& c : v.coords_) c *= s;
  return v;
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

// ------------------------------------------------------------ classification

namespace {

using Adjacency = std::vector<std::vector<Index>>;

std::vector<std::vector<Index>> connected_components(const Adjacency& adj) {
  std::vector<std::vector<Index>> comps;
  std::vector<bool> seen(adj.size(), false);
  for (Index s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Index> comp;
    std::deque<Index> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (Index y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Solves d_i * w(i,j) = d_j * w(j,i) over positive integers, minimal per
// connected component. w must have the same zero pattern in both orders.
std::optional<std::vector<std::int64_t>> solve_symmetrizer(
    std::size_t n, const std::function<std::int64_t(Index, Index)>& w) {
  Adjacency adj(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && w(i, j) != 0) adj[i].push_back(j);

  // d as reduced fraction num/den
  std::vector<std::int64_t> num(n, 0), den(n, 1);
  std::vector<std::int64_t> result(n, 0);
  for (const auto& comp : connected_components(adj)) {
    num[comp.front()] = 1;
    den[comp.front()] = 1;
    std::vector<bool> set(n, false);
    set[comp.front()] = true;
    std::deque<Index> queue{comp.front()};
    while (!queue.empty()) {
      Index i = queue.front();
      queue.pop_front();
      for (Index j : adj[i]) {
        // d_j = d_i * w(i,j) / w(j,i)
        std::int64_t p = num[i] * w(i, j);
        std::int64_t q = den[i] * w(j, i);
        if (q < 0) {
          p = -p;
          q = -q;
        }
        if (p <= 0) return std::nullopt;
        std::int64_t g = std::gcd(p, q);
        p /= g;
        q /= g;
        if (!set[j]) {
          set[j] = true;
          num[j] = p;
          den[j] = q;
          queue.push_back(j);
        } else if (num[j] != p || den[j] != q) {
          return std::nullopt;
        }
      }
    }
    std::int64_t l = 1;
    for (Index i : comp) l = std::lcm(l, den[i]);
    std::int64_t g = 0;
    for (Index i : comp) {
      result[i] = num[i] * (l / den[i]);
      g = std::gcd(g, result[i]);
    }
    for (Index i : comp) result[i] /= g;
  }
  return result;
}

std::size_t positive_roots_of(const DynkinComponent& c) {
  const auto n = static_cast<std::size_t>(c.rank);
  switch (c.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

// Classifies one connected valued graph; nullopt means infinite type.
std::optional<DynkinComponent> classify_component(const std::vector<std::vector<int>>& a,
                                                  const std::vector<Index>& comp,
                                                  const Adjacency& adj) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return DynkinComponent{'A', 1};

  std::size_t edges = 0;
  int valued = 0;
  int max_product = 1;
  std::pair<Index, Index> valued_edge;
  for (Index i : comp) {
    for (Index j : adj[i]) {
      if (j < i) continue;
      ++edges;
      const int p = a[i][j] * a[j][i];
      if (p >= 4) return std::nullopt;
      if (p > 1) {
        ++valued;
        max_product = p;
        valued_edge = {i, j};
      }
    }
  }
  if (edges != comp.size() - 1) return std::nullopt;  // contains a cycle
  if (valued > 1) return std::nullopt;
  if (max_product == 3) {
    if (n == 2) return DynkinComponent{'G', 2};
    return std::nullopt;
  }

  std::vector<Index> branch;
  std::vector<Index> ends;
  for (Index i : comp) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) branch.push_back(i);
    if (adj[i].size() == 1) ends.push_back(i);
  }
  if (branch.size() > 1) return std::nullopt;

  if (branch.empty()) {
    // Path: walk from the lowest-index end.
    std::vector<Index> path{ends.front()};
    while (path.size() < comp.size()) {
      const Index cur = path.back();
      const Index prev = path.size() > 1 ? path[path.size() - 2] : cur;
      path.push_back(adj[cur][0] != prev ? adj[cur][0] : adj[cur][1]);
    }
    if (valued == 0) return DynkinComponent{'A', n};
    auto pos = [&](Index v) { return std::find(path.begin(), path.end(), v) - path.begin(); };
    auto lo = std::min(pos(valued_edge.first), pos(valued_edge.second));
    if (lo != 0 && lo != n - 2) {
      if (n == 4 && lo == 1) return DynkinComponent{'F', 4};
      return std::nullopt;
    }
    if (lo == 0 && n > 2) std::reverse(path.begin(), path.end());
    // Valued edge is now path[n-2] -- path[n-1].
    const Index end = path[n - 1];
    const Index inner = path[n - 2];
    return DynkinComponent{a[end][inner] == -2 ? 'B' : 'C', n};
  }

  if (valued != 0) return std::nullopt;
  const Index center = branch.front();
  std::vector<int> arms;
  for (Index start : adj[center]) {
    int len = 1;
    Index prev = center;
    Index cur = start;
    while (adj[cur].size() == 2) {
      Index next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinComponent{'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return DynkinComponent{'E', n};
  return std::nullopt;
}

}  // namespace

std::string DynkinClassification::name() const {
  if (!finite) return "infinite";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += 'x';
    out += c.family;
    out += std::to_string(c.rank);
  }
  return out;
}

std::size_t DynkinClassification::positive_root_count() const {
  std::size_t total = 0;
  for (const auto& c : components) total += positive_roots_of(c);
  return total;
}

SymmetrizerReport validate(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::NotGeneralizedCartan, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != n) throw Error(Errc::NotGeneralizedCartan, "matrix is not square");
  for (Index i = 0; i < n; ++i) {
    if (rows[i][i] != 2)
      throw Error(Errc::NotGeneralizedCartan, "diagonal entry " + std::to_string(i + 1) + " is not 2");
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rows[i][j] > 0)
        throw Error(Errc::NotGeneralizedCartan, "positive off-diagonal entry");
      if ((rows[i][j] == 0) != (rows[j][i] == 0))
        throw Error(Errc::NotGeneralizedCartan, "zero pattern is not symmetric");
    }
  }
  auto d = solve_symmetrizer(n, [&](Index i, Index j) { return std::int64_t{rows[i][j]}; });
  if (!d) throw Error(Errc::NotSymmetrizable, "no positive diagonal symmetrizer");

  SymmetrizerReport report{*d, {}};
  Adjacency adj(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j && rows[i][j] != 0) adj[i].push_back(j);
  report.type.finite = true;
  for (const auto& comp : connected_components(adj)) {
    auto c = classify_component(rows, comp, adj);
    if (!c) {
      report.type.finite = false;
      report.type.components.clear();
      break;
    }
    report.type.components.push_back(*c);
  }
  return report;
}

// -------------------------------------------------------------- CartanMatrix

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)), report_(validate(rows_)) {}

CartanMatrix CartanMatrix::transposed() const {
  auto t = rows_;
  for (Index i = 0; i < rank(); ++i)
    for (Index j = 0; j < rank(); ++j) t[i][j] = rows_[j][i];
  return CartanMatrix(std::move(t));
}

CartanMatrix dynkin_cartan(char family, int rank) {
  auto bad = [&] {
    return Error(Errc::MalformedInput,
                 std::string("no Dynkin diagram ") + family + std::to_string(rank));
  };
  const bool ok = (family == 'A' && rank >= 1) || ((family == 'B' || family == 'C') && rank >= 2) ||
                  (family == 'D' && rank >= 4) || (family == 'E' && rank >= 6 && rank <= 8) ||
                  (family == 'F' && rank == 4) || (family == 'G' && rank == 2);
  if (!ok) throw bad();
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (Index i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](Index i, Index j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'D':
      for (Index i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      for (Index i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(2, n - 1);
      break;
    default:
      for (Index i = 0; i + 1 < n; ++i) link(i, i + 1);
  }
  if (family == 'B') a[n - 1][n - 2] = -2;
  if (family == 'C') a[n - 2][n - 1] = -2;
  if (family == 'F') a[2][1] = -2;
  if (family == 'G') a[1][0] = -3;
  return CartanMatrix(std::move(a));
}

// --------------------------------------------------------------- Orientation

Orientation::Orientation(const CartanMatrix& cartan, std::vector<Edge> edges) : n_(cartan.rank()) {
  for (const auto& [from, to] : edges) {
    if (from >= n_ || to >= n_)
      throw Error(Errc::IndexOutOfRange, "orientation vertex out of range");
    if (!cartan.adjacent(from, to))
      throw Error(Errc::InvalidOrientation, "arrow " + std::to_string(from + 1) + "->" +
                                                std::to_string(to + 1) + " is not an edge");
    if (edges_.contains({to, from}) || !edges_.insert({from, to}).second)
      throw Error(Errc::InvalidOrientation, "edge {" + std::to_string(from + 1) + "," +
                                                std::to_string(to + 1) + "} oriented twice");
  }
  for (Index i = 0; i < n_; ++i)
    for (Index j = i + 1; j < n_; ++j)
      if (cartan.adjacent(i, j) && !edges_.contains({i, j}) && !edges_.contains({j, i}))
        throw Error(Errc::InvalidOrientation, "edge {" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + "} has no direction");
}

Orientation Orientation::standard(const CartanMatrix& cartan) {
  std::vector<Edge> edges;
  for (Index i = 0; i < cartan.rank(); ++i)
    for (Index j = i + 1; j < cartan.rank(); ++j)
      if (cartan.adjacent(i, j)) edges.emplace_back(j, i);
  return Orientation(cartan, std::move(edges));
}

bool Orientation::is_acyclic() const {
  std::vector<std::size_t> indegree(n_, 0);
  for (const auto& e : edges_) ++indegree[e.second];
  std::deque<Index> ready;
  for (Index i = 0; i < n_; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  std::size_t visited = 0;
  while (!ready.empty()) {
    Index x = ready.front();
    ready.pop_front();
    ++visited;
    for (auto it = edges_.lower_bound({x, 0}); it != edges_.end() && it->first == x; ++it)
      if (--indegree[it->second] == 0) ready.push_back(it->second);
  }
  return visited == n_;
}

// ------------------------------------------------------------ ExchangeMatrix

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
  for (Index i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != rows_.size())
      throw Error(Errc::MalformedInput, "exchange matrix is not square");
    if (rows_[i][i] != 0) throw Error(Errc::MalformedInput, "exchange matrix diagonal must be 0");
  }
}

ExchangeMatrix ExchangeMatrix::zero(std::size_t n) {
  return ExchangeMatrix(std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
}

bool ExchangeMatrix::is_skew_symmetrized_by(const std::vector<std::int64_t>& d) const {
  if (d.size() != size()) return false;
  for (Index i = 0; i < size(); ++i)
    for (Index j = 0; j < size(); ++j)
      if (d[i] * rows_[i][j] != -d[j] * rows_[j][i]) return false;
  return true;
}

std::optional<std::vector<std::int64_t>> ExchangeMatrix::skew_symmetrizer() const {
  for (Index i = 0; i < size(); ++i)
    for (Index j = 0; j < size(); ++j)
      if (rows_[i][j] * rows_[j][i] > 0 || ((rows_[i][j] == 0) != (rows_[j][i] == 0)))
        return std::nullopt;
  auto d = solve_symmetrizer(size(), [&](Index i, Index j) { return rows_[i][j] < 0 ? -rows_[i][j] : rows_[i][j]; });
  if (!d || !is_skew_symmetrized_by(*d)) return std::nullopt;
  return d;
}

// --------------------------------------------------------------- reflections

RootVector simple_reflection(const CartanMatrix& cartan, Index i, const RootVector& v) {
  const std::size_t n = cartan.rank();
  if (i >= n || v.size() != n) throw Error(Errc::IndexOutOfRange, "reflection index or vector size");
  RootVector out = v;
  std::int64_t c = -v[i];
  for (Index j = 0; j < n; ++j)
    if (j != i) c -= static_cast<std::int64_t>(cartan(j, i)) * v[j];
  out[i] = c;
  return out;
}

RootVector truncated_reflection(const CartanMatrix& cartan, Index i, const RootVector& v) {
  if (i >= cartan.rank()) throw Error(Errc::IndexOutOfRange, "reflection index");
  if (auto t = v.negative_simple_index(); t && *t != i) return v;
  if (!v.is_almost_positive_shape())
    throw Error(Errc::NotAlmostPositive, v.to_string() + " is neither positive nor a negative simple root");
  return simple_reflection(cartan, i, v);
}

Bipartition bipartition(const CartanMatrix& cartan) {
  const std::size_t n = cartan.rank();
  std::vector<int> color(n, -1);
  for (Index s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<Index> queue{s};
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      for (Index y = 0; y < n; ++y) {
        if (!cartan.adjacent(x, y)) continue;
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          throw Error(Errc::NotBipartite, "underlying graph has an odd cycle");
        }
      }
    }
  }
  Bipartition parts;
  for (Index i = 0; i < n; ++i) (color[i] == 0 ? parts.plus : parts.minus).push_back(i);
  return parts;
}

RootVector sigma_pm(const CartanMatrix& cartan, const Bipartition& parts, Part part,
                    const RootVector& v) {
  RootVector out = v;
  for (Index i : part == Part::Plus ? parts.plus : parts.minus) out = truncated_reflection(cartan, i, out);
  return out;
}

std::vector<RootVector> almost_positive_roots(const CartanMatrix& cartan) {
  if (!cartan.is_finite_type())
    throw Error(Errc::InfiniteType, "root enumeration needs a finite type Cartan matrix");
  const std::size_t n = cartan.rank();
  const std::size_t bound = cartan.type().positive_root_count();

  std::set<RootVector> positive;
  std::deque<RootVector> queue;
  for (Index i = 0; i < n; ++i) {
    positive.insert(RootVector::simple(n, i));
    queue.push_back(RootVector::simple(n, i));
  }
  while (!queue.empty()) {
    RootVector v = queue.front();
    queue.pop_front();
    for (Index i = 0; i < n; ++i) {
      RootVector w = simple_reflection(cartan, i, v);
      if (w.is_positive() && positive.insert(w).second) {
        if (positive.size() > bound)
          throw Error(Errc::InfiniteType, "reflection closure exceeds the predicted root count");
        queue.push_back(std::move(w));
      }
    }
  }

  std::vector<RootVector> roots;
  roots.reserve(positive.size() + n);
  for (Index i = 0; i < n; ++i) roots.push_back(RootVector::negative_simple(n, i));
  std::vector<RootVector> pos(positive.begin(), positive.end());
  std::stable_sort(pos.begin(), pos.end(),
                   [](const RootVector& a, const RootVector& b) { return a.height() < b.height(); });
  roots.insert(roots.end(), pos.begin(), pos.end());
  return roots;
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(CartanMatrix cartan)
    : cartan_(std::move(cartan)),
      parts_(bipartition(cartan_)),
      roots_(almost_positive_roots(cartan_)),
      lookup_(roots_.begin(), roots_.end()) {}

bool RootSystem::contains(const RootVector& v) const { return lookup_.contains(v); }

std::size_t RootSystem::compatibility_degree(const RootVector& alpha, const RootVector& beta) const {
  if (!contains(alpha) || !contains(beta))
    throw Error(Errc::NotAlmostPositive, "compatibility degree needs almost positive roots");
  RootVector a = alpha;
  RootVector b = beta;
  // Start with the part that moves the first argument.
  Part part = Part::Minus;
  for (Index i : parts_.plus)
    if (a[i] != 0) part = Part::Plus;
  const std::size_t bound = 2 * roots_.size();
  for (std::size_t step = 0; step <= bound; ++step) {
    if (auto t = a.negative_simple_index()) return static_cast<std::size_t>(std::max<std::int64_t>(b[*t], 0));
    a = sigma_pm(cartan_, parts_, part, a);
    b = sigma_pm(cartan_, parts_, part, b);
    part = part == Part::Plus ? Part::Minus : Part::Plus;
  }
  throw Error(Errc::ReductionDidNotTerminate, "sigma reduction of " + alpha.to_string());
}

std::size_t compatibility_degree(const CartanMatrix& cartan, const RootVector& alpha,
                                 const RootVector& beta) {
  return RootSystem(cartan).compatibility_degree(alpha, beta);
}

// --------------------------------------------------------------- orientations

SinksAndSources sinks_and_sources(const Orientation& quiver) {
  std::vector<bool> has_out(quiver.size(), false), has_in(quiver.size(), false);
  for (const auto& [from, to] : quiver.edges()) {
    has_out[from] = true;
    has_in[to] = true;
  }
  SinksAndSources out;
  for (Index i = 0; i < quiver.size(); ++i) {
    if (!has_out[i]) out.sinks.push_back(i);
    if (!has_in[i]) out.sources.push_back(i);
  }
  return out;
}

Orientation reflect_orientation(const Orientation& quiver, Index k) {
  if (k >= quiver.size()) throw Error(Errc::IndexOutOfRange, "reflection vertex");
  const auto ends = sinks_and_sources(quiver);
  const bool sink = std::find(ends.sinks.begin(), ends.sinks.end(), k) != ends.sinks.end();
  const bool source = std::find(ends.sources.begin(), ends.sources.end(), k) != ends.sources.end();
  if (!sink && !source)
    throw Error(Errc::NotSinkOrSource, "vertex " + std::to_string(k + 1) + " is neither a sink nor a source");
  std::set<Orientation::Edge> edges;
  for (const auto& [from, to] : quiver.edges()) {
    if (from == k || to == k)
      edges.insert({to, from});
    else
      edges.insert({from, to});
  }
  return Orientation(quiver.size(), std::move(edges));
}

std::vector<Index> admissible_sink_sequence(const Orientation& quiver) {
  const std::size_t n = quiver.size();
  std::vector<Index> order;
  std::vector<bool> used(n, false);
  Orientation current = quiver;
  while (order.size() < n) {
    const auto ends = sinks_and_sources(current);
    auto it = std::find_if(ends.sinks.begin(), ends.sinks.end(), [&](Index v) { return !used[v]; });
    if (it == ends.sinks.end()) throw Error(Errc::CyclicOrientation, "no admissible sequence of sinks");
    used[*it] = true;
    order.push_back(*it);
    current = reflect_orientation(current, *it);
  }
  return order;
}

ExchangeMatrix exchange_matrix_from(const CartanMatrix& cartan, const Orientation& quiver) {
  if (quiver.size() != cartan.rank()) throw Error(Errc::IndexOutOfRange, "orientation rank mismatch");
  auto b = ExchangeMatrix::zero(cartan.rank());
  for (const auto& [x, z] : quiver.edges()) {
    b.at(x, z) = cartan(z, x);
    b.at(z, x) = -cartan(x, z);
  }
  return b;
}

CartanMatrix cartan_counterpart(const ExchangeMatrix& b) {
  if (!b.skew_symmetrizer()) throw Error(Errc::NotSkewSymmetrizable, "exchange matrix");
  const std::size_t n = b.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      a[i][j] = i == j ? 2 : -static_cast<int>(b(j, i) < 0 ? -b(j, i) : b(j, i));
  return CartanMatrix(std::move(a));
}

}  // namespace clusterkit
