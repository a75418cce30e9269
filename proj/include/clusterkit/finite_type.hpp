#pragma once

// Finite-type cluster category C(Omega): indecomposables are labeled by
// almost positive roots, tau acts as sigma_hat, and a cluster tilting set is
// n pairwise compatible roots. Denominators of every cluster variable with
// respect to every cluster are predicted from the compatibility pairing and
// checked against a symbolic re-expansion.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/mutation.hpp"
#include "clusterkit/rootkit.hpp"

namespace clusterkit {

enum class PairingOrder { BetaAlpha, AlphaBeta };

// beta_i = sigma_hat^shift(root of the i-th cluster variable); component i of
// gamma_V(alpha) is the degree taken in `order`.
struct PairingConstant {
  int shift;
  PairingOrder order;
  friend bool operator==(const PairingConstant&, const PairingConstant&) = default;
};

inline constexpr PairingConstant kCalibratedPairing{0, PairingOrder::BetaAlpha};

std::string to_string(const PairingConstant& c);

class ClusterCategory {
 public:
  // Throws InfiniteType or CyclicOrientation.
  ClusterCategory(CartanMatrix cartan, Orientation orientation);

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  const Orientation& orientation() const noexcept { return orientation_; }
  const std::vector<Index>& order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return cartan_.rank(); }
  // One object per almost positive root.
  const std::vector<RootVector>& objects() const noexcept { return roots_.almost_positive(); }
  const RootSystem& roots() const noexcept { return roots_; }

  RootVector tau(const RootVector& root) const;
  RootVector tau_inverse(const RootVector& root) const;

  // Degree invariant under tau with (-alpha_i || beta) = max(beta_i, 0).
  // Equals the sigma_+/sigma_- degree when Omega is bipartite.
  std::size_t omega_compatibility(const RootVector& alpha, const RootVector& beta) const;

  // n distinct objects, pairwise compatible in both orders.
  bool is_cluster_tilting(const std::vector<RootVector>& objs) const;
  std::vector<std::vector<RootVector>> tilting_sets() const;

  // Denominator vector of the object with root `m` relative to the cluster
  // whose variables have roots V (in slot order).
  RootVector gamma_V(const std::vector<RootVector>& V, const RootVector& m,
                     PairingConstant pairing = kCalibratedPairing) const;
  RootVector sigma_V(const std::vector<RootVector>& V, const RootVector& root,
                     PairingConstant pairing = kCalibratedPairing) const {
    return gamma_V(V, root, pairing);
  }

 private:
  std::size_t index_of(const RootVector& root) const;

  CartanMatrix cartan_;
  Orientation orientation_;
  std::vector<Index> order_;
  RootSystem roots_;
  std::map<RootVector, std::size_t> index_;
  std::vector<std::vector<std::size_t>> omega_degree_;
};

// Number of n-subsets of Phi_{>=-1} that are pairwise compatible in both
// orders under the sigma_+/sigma_- degree.
std::size_t count_compatible_subsets(const RootSystem& roots);

struct AxiomReport {
  std::string type;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

// Exhaustive over ordered pairs: (sigma_pm a || sigma_pm b) = (a || b) for
// both parts, and (-alpha_i || b) = max(b_i, 0).
AxiomReport verify_compatibility_axioms(const RootSystem& roots);

struct ClusterDenominator {
  ReducedFraction in_initial;  // expression in u_1..u_n
  ReducedFraction in_cluster;  // expression in the target cluster's y_1..y_n
};

// Replays `path` from (u, B), then re-expands every cluster variable in
// fresh indeterminates y for the reached cluster by mutating both seeds in
// lockstep. Keyed by the canonical bytes of the u-expression.
std::map<std::string, ClusterDenominator> denominators_wrt_cluster(const ExchangeMatrix& b,
                                                                    const std::vector<Index>& path,
                                                                    std::size_t max_seeds = kDefaultMaxSeeds);

struct Prop48Report {
  std::string type;
  std::size_t clusters_checked = 0;
  std::size_t objects_checked = 0;
  PairingConstant pairing = kCalibratedPairing;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

// Every cluster x and every cluster variable: the y-denominator equals
// gamma_V of the variable's root, the y-numerator is content-free, and
// denominators are distinct within each cluster.
Prop48Report verify_prop48(const CartanMatrix& cartan, const Orientation& orientation,
                           PairingConstant pairing = kCalibratedPairing, std::size_t max_seeds = kDefaultMaxSeeds);

struct CalibrationResult {
  PairingConstant chosen;
  std::vector<PairingConstant> fitting;  // every candidate passing on A2
};

// Tries shift in {-1, 0, 1} and both orders against A2. Only the order may
// tie (A2's degree is symmetric); that tie goes to BetaAlpha. Throws
// VerificationFailed when no candidate fits or the shift is ambiguous.
CalibrationResult calibrate_pairing();

}  // namespace clusterkit
