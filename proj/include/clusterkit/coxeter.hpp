#pragma once

// Coxeter automorphism orbits T^m(u_k), their dimension-vector shadow
// sigma_hat^m(-alpha_k), an independent AR-recursion oracle, and the
// denominator verifier tying the two together.
//
// `order` is always an admissible sequence of sinks k_1..k_n (see
// admissible_sink_sequence); T = T_{k_n} ... T_{k_1} and
// sigma_hat = sigma_{k_n} o ... o sigma_{k_1}.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterkit/laurent.hpp"
#include "clusterkit/mutation.hpp"
#include "clusterkit/rootkit.hpp"

namespace clusterkit {

struct OrbitPosition {
  int m;
  Index k;
  friend auto operator<=>(const OrbitPosition&, const OrbitPosition&) = default;
};

using OrbitTable = std::map<OrbitPosition, ReducedFraction>;
using DimTable = std::map<OrbitPosition, RootVector>;

// Replaces vars[i] by (prod_{a[i][k]<0} vars[k]^{-a[i][k]} + 1) / vars[i].
// Applying slots i_1, ..., i_r in turn to (u) yields (T_{i_1} ... T_{i_r})(u).
std::vector<ReducedFraction> t_i_apply(const CartanMatrix& cartan, Index i, std::vector<ReducedFraction> vars);

RootVector sigma_hat(const CartanMatrix& cartan, const std::vector<Index>& order, const RootVector& v);
RootVector sigma_hat_inverse(const CartanMatrix& cartan, const std::vector<Index>& order, const RootVector& v);

// sigma_hat^m(-alpha_k); negative m applies the inverse.
RootVector preprojective_dim_vector(const CartanMatrix& cartan, const std::vector<Index>& order, int m, Index k);

// Smallest p > 0 with sigma_hat^p(-alpha_k) = -alpha_k, searching up to cap.
std::optional<int> dim_orbit_period(const CartanMatrix& cartan, const std::vector<Index>& order, Index k, int cap);

struct CoxeterOrbit {
  int m_from = 0;
  int m_to = 0;
  OrbitTable vars;
  // Smallest p > 0 with T^p(u) = u, when reached while sweeping.
  std::optional<int> period;
};

// Window recurrence
//   T^{m+1}(u_i) T^m(u_i) = prod_{j after i} T^{m+1}(u_j)^{-a_ij}
//                           * prod_{j before i} T^m(u_j)^{-a_ij} + 1
// swept forward (positions n..1) and backward (positions 1..n). Once the
// window returns to (u) the table is filled by periodicity.
// Throws WindowInconsistent when an exchange division is not exact.
CoxeterOrbit coxeter_orbit(const CartanMatrix& cartan, const std::vector<Index>& order, int m_from, int m_to);

// Dimension vectors for m = 0..m_max from the additive AR relation
//   d(m+1,i) = sum_{j after i} (-a_ij) d(m+1,j) + sum_{j before i} (-a_ij) d(m,j) - d(m,i)
// where summands that are negative simple roots are dropped.
DimTable ar_recursion_oracle(const CartanMatrix& cartan, const std::vector<Index>& order, int m_max);

struct Thm44Row {
  OrbitPosition pos;
  ReducedFraction variable;
  RootVector dim;
  bool denominator_ok = false;
  bool positive_ok = false;
  bool content_free_ok = false;
};

struct Thm44Report {
  std::string type;
  int m_from = 0;
  int m_to = 0;
  std::vector<Index> order;
  std::vector<Thm44Row> rows;  // sorted by (m, k)
  std::size_t steps_checked = 0;
  std::size_t distinct_variables = 0;
  std::optional<int> period;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

// Test hook: run the verifier with one convention flipped to confirm the
// check is sensitive to it. Production callers use the defaults.
struct ConventionOverride {
  bool transpose_reflection = false;  // s_i with row i instead of column i
  bool transpose_exchange = false;    // b[x][z] = a[x][z] for arrows x->z
};

// Recomputes T^m(u_k) for m in [m_from, m_to] and checks at every single
// window step: the denominator equals sigma_hat^m(-alpha_k), the step agrees
// with seed mutation of (window, B for the current orientation), and the
// numerator is positive and content-free. Also checks that positions with
// distinct dimension vectors carry distinct variables.
// Throws CyclicOrientation for cyclic input.
Thm44Report verify_thm44(const CartanMatrix& cartan, const Orientation& orientation, int m_from, int m_to,
                         ConventionOverride conventions = {});

// Default verification range: a full period for finite type, [-8, 8] otherwise.
std::pair<int, int> default_thm44_range(const CartanMatrix& cartan, const Orientation& orientation);

// T^period for finite type, searching at most 2*|Phi_{>=-1}| sweeps.
std::optional<int> coxeter_period(const CartanMatrix& cartan, const std::vector<Index>& order);

}  // namespace clusterkit
