#pragma once

// Generalized Cartan matrices, valued-quiver orientations, root vectors,
// truncated reflections and the compatibility degree on almost positive roots.
//
// Indices are 0-based everywhere in the library; the JSON/CLI layer converts
// to the 1-based vertex names users see.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clusterkit/error.hpp"

namespace clusterkit {

using Index = std::size_t;

class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t n) : coords_(n, 0) {}
  explicit RootVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  RootVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static RootVector simple(std::size_t n, Index i);
  static RootVector negative_simple(std::size_t n, Index i);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](Index i) const { return coords_[i]; }
  std::int64_t& operator[](Index i) { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  // Componentwise >= 0 and not zero.
  bool is_positive() const noexcept;
  // Index t when the vector is -alpha_t.
  std::optional<Index> negative_simple_index() const noexcept;
  bool is_almost_positive_shape() const noexcept {
    return is_positive() || negative_simple_index().has_value();
  }
  std::int64_t height() const noexcept;

  RootVector& operator+=(const RootVector& other);
  RootVector& operator-=(const RootVector& other);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(std::int64_t s, RootVector v);

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  // "(1,0,-1)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

// One connected piece of a Dynkin classification, e.g. {'B', 3}.
struct DynkinComponent {
  char family;
  int rank;
  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

struct DynkinClassification {
  bool finite = false;
  std::vector<DynkinComponent> components;  // empty when !finite
  // "A2", "B2xA1", or "infinite".
  std::string name() const;
  // Number of positive roots, only meaningful when finite.
  std::size_t positive_root_count() const;
};

struct SymmetrizerReport {
  std::vector<std::int64_t> symmetrizer;
  DynkinClassification type;
};

// Checks the generalized-Cartan sign pattern and symmetrizability; throws
// NotGeneralizedCartan / NotSymmetrizable.
SymmetrizerReport validate(const std::vector<std::vector<int>>& rows);

class CartanMatrix {
 public:
  explicit CartanMatrix(std::vector<std::vector<int>> rows);

  std::size_t rank() const noexcept { return rows_.size(); }
  int operator()(Index i, Index j) const { return rows_[i][j]; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  const std::vector<std::int64_t>& symmetrizer() const noexcept { return report_.symmetrizer; }
  const DynkinClassification& type() const noexcept { return report_.type; }
  bool is_finite_type() const noexcept { return report_.type.finite; }
  bool adjacent(Index i, Index j) const { return i != j && rows_[i][j] != 0; }

  CartanMatrix transposed() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  SymmetrizerReport report_;
};

// Named Dynkin Cartan matrices on the path 1-2-...-n (D and E branch at the
// usual node). B_n has a[n][n-1] = -2, C_n is its transpose, G2 has
// a[2][1] = -3.
CartanMatrix dynkin_cartan(char family, int rank);

// Acyclicity is not an invariant of the type itself: mutation input may be
// cyclic, the functions that need acyclicity check it.
class Orientation {
 public:
  using Edge = std::pair<Index, Index>;  // tail -> head

  // Requires exactly one direction for every edge of the underlying graph.
  Orientation(const CartanMatrix& cartan, std::vector<Edge> edges);

  // Edge j -> i for every adjacent pair i < j; (1,...,n) is then admissible.
  static Orientation standard(const CartanMatrix& cartan);

  std::size_t size() const noexcept { return n_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  bool has_arrow(Index from, Index to) const { return edges_.contains({from, to}); }
  bool is_acyclic() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Orientation(std::size_t n, std::set<Edge> edges) : n_(n), edges_(std::move(edges)) {}
  friend Orientation reflect_orientation(const Orientation& quiver, Index k);

  std::size_t n_ = 0;
  std::set<Edge> edges_;
};

class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(std::vector<std::vector<std::int64_t>> rows);
  static ExchangeMatrix zero(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }
  std::int64_t operator()(Index i, Index j) const { return rows_[i][j]; }
  std::int64_t& at(Index i, Index j) { return rows_.at(i).at(j); }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

  // D*B skew-symmetric for the diagonal D = diag(d).
  bool is_skew_symmetrized_by(const std::vector<std::int64_t>& d) const;
  // Minimal positive skew-symmetrizer, if one exists.
  std::optional<std::vector<std::int64_t>> skew_symmetrizer() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

RootVector simple_reflection(const CartanMatrix& cartan, Index i, const RootVector& v);
RootVector truncated_reflection(const CartanMatrix& cartan, Index i, const RootVector& v);

struct Bipartition {
  std::vector<Index> plus;
  std::vector<Index> minus;
};
enum class Part { Plus, Minus };

Bipartition bipartition(const CartanMatrix& cartan);
RootVector sigma_pm(const CartanMatrix& cartan, const Bipartition& parts, Part part,
                    const RootVector& v);

std::vector<RootVector> almost_positive_roots(const CartanMatrix& cartan);

// Finite root system with the data the compatibility degree needs.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cartan);  // throws InfiniteType

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  const Bipartition& parts() const noexcept { return parts_; }
  // Negative simples first, then positive roots by height.
  const std::vector<RootVector>& almost_positive() const noexcept { return roots_; }
  bool contains(const RootVector& v) const;
  std::size_t rank() const noexcept { return cartan_.rank(); }

  std::size_t compatibility_degree(const RootVector& alpha, const RootVector& beta) const;

 private:
  CartanMatrix cartan_;
  Bipartition parts_;
  std::vector<RootVector> roots_;
  std::set<RootVector> lookup_;
};

std::size_t compatibility_degree(const CartanMatrix& cartan, const RootVector& alpha,
                                 const RootVector& beta);

struct SinksAndSources {
  std::vector<Index> sinks;
  std::vector<Index> sources;
};
SinksAndSources sinks_and_sources(const Orientation& quiver);
Orientation reflect_orientation(const Orientation& quiver, Index k);
std::vector<Index> admissible_sink_sequence(const Orientation& quiver);

ExchangeMatrix exchange_matrix_from(const CartanMatrix& cartan, const Orientation& quiver);
CartanMatrix cartan_counterpart(const ExchangeMatrix& b);

}  // namespace clusterkit
