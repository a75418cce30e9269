#include "clusterkit/finite_type.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <thread>
#include <unordered_set>

namespace clusterkit {

std::string to_string(const PairingConstant& c) {
  return "shift " + std::to_string(c.shift) + ", " +
         (c.order == PairingOrder::BetaAlpha ? "(beta||alpha)" : "(alpha||beta)");
}

ClusterCategory::ClusterCategory(CartanMatrix cartan, Orientation orientation)
    : cartan_(std::move(cartan)),
      orientation_(std::move(orientation)),
      order_(admissible_sink_sequence(orientation_)),
      roots_(cartan_) {
  const auto& all = roots_.almost_positive();
  const std::size_t count = all.size();
  for (std::size_t a = 0; a < count; ++a) index_.emplace(all[a], a);

  // Walk each root back along tau^{-1} until it is some -alpha_i; the same
  // number of steps applied to the second argument gives the degree.
  std::vector<std::size_t> tau_inv(count);
  for (std::size_t a = 0; a < count; ++a) tau_inv[a] = index_of(tau_inverse(all[a]));
  omega_degree_.assign(count, std::vector<std::size_t>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    std::size_t steps = 0;
    std::size_t cur = a;
    while (!all[cur].negative_simple_index()) {
      cur = tau_inv[cur];
      if (++steps > count) throw Error(Errc::ReductionDidNotTerminate, "tau orbit misses the negative simples");
    }
    const Index i = *all[cur].negative_simple_index();
    for (std::size_t b = 0; b < count; ++b) {
      std::size_t other = b;
      for (std::size_t s = 0; s < steps; ++s) other = tau_inv[other];
      omega_degree_[a][b] = static_cast<std::size_t>(std::max<std::int64_t>(all[other][i], 0));
    }
  }
}

std::size_t ClusterCategory::index_of(const RootVector& root) const {
  auto it = index_.find(root);
  if (it == index_.end()) throw Error(Errc::NotAlmostPositive, root.to_string() + " is not an almost positive root");
  return it->second;
}

RootVector ClusterCategory::tau(const RootVector& root) const { return sigma_hat(cartan_, order_, root); }

RootVector ClusterCategory::tau_inverse(const RootVector& root) const {
  return sigma_hat_inverse(cartan_, order_, root);
}

std::size_t ClusterCategory::omega_compatibility(const RootVector& alpha, const RootVector& beta) const {
  return omega_degree_[index_of(alpha)][index_of(beta)];
}

bool ClusterCategory::is_cluster_tilting(const std::vector<RootVector>& objs) const {
  if (objs.size() != rank()) return false;
  std::vector<std::size_t> idx;
  for (const auto& r : objs) idx.push_back(index_of(r));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (a == b) continue;
      if (idx[a] == idx[b] || omega_degree_[idx[a]][idx[b]] != 0) return false;
    }
  return true;
}

namespace {

// Cliques of size n in the compatibility graph, in lexicographic index order.
template <class Compatible>
void for_each_clique(std::size_t count, std::size_t n, Compatible compatible,
                     const std::function<void(const std::vector<std::size_t>&)>& emit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (chosen.size() == n) {
      emit(chosen);
      return;
    }
    for (std::size_t c = from; c < count; ++c) {
      bool ok = true;
      for (std::size_t p : chosen)
        if (!compatible(p, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      extend(c + 1);
      chosen.pop_back();
    }
  };
  extend(0);
}

}  // namespace

std::vector<std::vector<RootVector>> ClusterCategory::tilting_sets() const {
  const auto& all = objects();
  std::vector<std::vector<RootVector>> out;
  for_each_clique(
      all.size(), rank(),
      [&](std::size_t a, std::size_t b) { return omega_degree_[a][b] == 0 && omega_degree_[b][a] == 0; },
      [&](const std::vector<std::size_t>& c) {
        std::vector<RootVector> set;
        for (std::size_t a : c) set.push_back(all[a]);
        out.push_back(std::move(set));
      });
  return out;
}

RootVector ClusterCategory::gamma_V(const std::vector<RootVector>& V, const RootVector& m,
                                    PairingConstant pairing) const {
  const std::size_t n = rank();
  if (V.size() != n) throw Error(Errc::MalformedInput, "tilting set needs " + std::to_string(n) + " objects");
  RootVector out(n);
  for (Index i = 0; i < n; ++i) {
    RootVector beta = V[i];
    for (int s = 0; s < pairing.shift; ++s) beta = tau(beta);
    for (int s = 0; s > pairing.shift; --s) beta = tau_inverse(beta);
    if (beta == m) return RootVector::negative_simple(n, i);
    out[i] = static_cast<std::int64_t>(pairing.order == PairingOrder::BetaAlpha ? omega_compatibility(beta, m)
                                                                                : omega_compatibility(m, beta));
  }
  return out;
}

std::size_t count_compatible_subsets(const RootSystem& roots) {
  const auto& all = roots.almost_positive();
  const std::size_t count = all.size();
  std::vector<std::vector<bool>> ok(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      ok[a][b] = a != b && roots.compatibility_degree(all[a], all[b]) == 0 &&
                 roots.compatibility_degree(all[b], all[a]) == 0;
  std::size_t total = 0;
  for_each_clique(
      count, roots.rank(), [&](std::size_t a, std::size_t b) { return ok[a][b]; },
      [&](const std::vector<std::size_t>&) { ++total; });
  return total;
}

AxiomReport verify_compatibility_axioms(const RootSystem& roots) {
  AxiomReport report;
  report.type = roots.cartan().type().name();
  const auto& all = roots.almost_positive();
  for (const auto& a : all)
    for (const auto& b : all) {
      ++report.pairs_checked;
      const std::size_t d = roots.compatibility_degree(a, b);
      for (Part part : {Part::Plus, Part::Minus}) {
        const RootVector sa = sigma_pm(roots.cartan(), roots.parts(), part, a);
        const RootVector sb = sigma_pm(roots.cartan(), roots.parts(), part, b);
        if (roots.compatibility_degree(sa, sb) != d)
          report.failures.push_back("(" + a.to_string() + "||" + b.to_string() + ") changes under sigma" +
                                    (part == Part::Plus ? "+" : "-"));
      }
      if (auto i = a.negative_simple_index()) {
        if (d != static_cast<std::size_t>(std::max<std::int64_t>(b[*i], 0)))
          report.failures.push_back("(" + a.to_string() + "||" + b.to_string() + ") breaks the base case");
      }
    }
  return report;
}

std::map<std::string, ClusterDenominator> denominators_wrt_cluster(const ExchangeMatrix& b,
                                                                    const std::vector<Index>& path,
                                                                    std::size_t max_seeds) {
  const std::size_t n = b.size();
  for (Index z : path)
    if (z >= n) throw Error(Errc::PathInvalid, "direction " + std::to_string(z + 1) + " out of range");
  Seed u = mutate_along(initial_seed(b), path);
  Seed y = initial_seed(u.matrix);

  std::map<std::string, ClusterDenominator> out;
  std::unordered_set<SeedKey> seen;
  std::deque<std::pair<Seed, Seed>> queue;
  auto record = [&](const Seed& us, const Seed& ys) {
    for (Index i = 0; i < n; ++i) out.emplace(us.vars[i].canonical_bytes(), ClusterDenominator{us.vars[i], ys.vars[i]});
  };
  seen.insert(canonical_key(u));
  record(u, y);
  queue.emplace_back(std::move(u), std::move(y));
  while (!queue.empty()) {
    auto [us, ys] = std::move(queue.front());
    queue.pop_front();
    for (Index z = 0; z < n; ++z) {
      Seed un = mutate_seed(us, z);
      if (!seen.insert(canonical_key(un)).second) continue;
      if (seen.size() > max_seeds) throw Error(Errc::BoundExceeded, "re-expansion exceeds the seed bound");
      Seed yn = mutate_seed(ys, z);
      record(un, yn);
      queue.emplace_back(std::move(un), std::move(yn));
    }
  }
  return out;
}

namespace {

RootVector as_root(const ExponentVector& e) {
  RootVector r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[i] = e[i];
  return r;
}

std::vector<std::string> check_cluster(const ClusterCategory& cat, const ExchangeMatrix& b, const Seed& seed,
                                      PairingConstant pairing, std::size_t max_seeds, std::size_t& objects) {
  std::vector<std::string> failures;
  const std::size_t n = seed.rank();
  std::string where = "cluster via [";
  for (std::size_t t = 0; t < seed.path.size(); ++t) where += (t ? "," : "") + std::to_string(seed.path[t] + 1);
  where += "]";

  std::vector<RootVector> V;
  for (const auto& x : seed.vars) V.push_back(as_root(x.denominator()));
  try {
    if (!cat.is_cluster_tilting(V)) failures.push_back(where + ": roots of the cluster are not a tilting set");
  } catch (const Error& e) {
    failures.push_back(where + ": " + e.what());
    return failures;
  }

  const auto table = denominators_wrt_cluster(b, seed.path, max_seeds);
  std::set<ExponentVector> denominators;
  for (const auto& [key, entry] : table) {
    ++objects;
    const RootVector alpha = as_root(entry.in_initial.denominator());
    const RootVector truth = as_root(entry.in_cluster.denominator());
    RootVector predicted;
    try {
      predicted = cat.gamma_V(V, alpha, pairing);
    } catch (const Error& e) {
      failures.push_back(where + ": " + e.what());
      continue;
    }
    if (predicted != truth)
      failures.push_back(where + ": " + entry.in_initial.display() + " has denominator " + truth.to_string() +
                         ", predicted " + predicted.to_string());
    if (!entry.in_cluster.is_content_free())
      failures.push_back(where + ": numerator of " + entry.in_initial.display() + " is divisible by some x_i");
    if (!denominators.insert(entry.in_cluster.denominator()).second)
      failures.push_back(where + ": denominator " + truth.to_string() + " repeats");
  }
  if (table.size() != cat.objects().size())
    failures.push_back(where + ": " + std::to_string(table.size()) + " variables for " +
                       std::to_string(cat.objects().size()) + " objects");
  (void)n;
  return failures;
}

}  // namespace

Prop48Report verify_prop48(const CartanMatrix& cartan, const Orientation& orientation, PairingConstant pairing,
                           std::size_t max_seeds) {
  if (!cartan.is_finite_type()) throw Error(Errc::InfiniteType, "Cartan matrix is not of finite type");
  const ClusterCategory cat(cartan, orientation);
  const ExchangeMatrix b = exchange_matrix_from(cartan, orientation);
  const ExchangeGraph graph = enumerate_exchange_graph(b, max_seeds);

  Prop48Report report;
  report.type = cartan.type().name();
  report.pairing = pairing;
  const std::size_t count = graph.cluster_count();
  std::vector<std::vector<std::string>> per_cluster(count);
  std::vector<std::size_t> objects(count, 0);

  // Clusters are independent; results land in per-index slots so the report
  // order is the breadth-first order regardless of scheduling.
  const std::size_t workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  auto run = [&](std::size_t first) {
    for (std::size_t c = first; c < count; c += workers) {
      try {
        per_cluster[c] = check_cluster(cat, b, graph.nodes[c].seed, pairing, max_seeds, objects[c]);
      } catch (const Error& e) {
        per_cluster[c].push_back(e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();

  for (std::size_t c = 0; c < count; ++c) {
    report.objects_checked += objects[c];
    for (auto& f : per_cluster[c]) report.failures.push_back(std::move(f));
  }
  report.clusters_checked = count;
  return report;
}

CalibrationResult calibrate_pairing() {
  const CartanMatrix a2 = dynkin_cartan('A', 2);
  const Orientation omega = Orientation::standard(a2);
  CalibrationResult result{kCalibratedPairing, {}};
  for (int shift : {-1, 0, 1})
    for (PairingOrder order : {PairingOrder::BetaAlpha, PairingOrder::AlphaBeta}) {
      const PairingConstant c{shift, order};
      if (verify_prop48(a2, omega, c).passed()) result.fitting.push_back(c);
    }
  if (result.fitting.empty()) throw Error(Errc::VerificationFailed, "no pairing constant fits A2");
  std::set<int> shifts;
  for (const auto& c : result.fitting) shifts.insert(c.shift);
  if (shifts.size() != 1) throw Error(Errc::VerificationFailed, "A2 does not determine the pairing shift");
  result.chosen = result.fitting.front();
  for (const auto& c : result.fitting)
    if (c.order == PairingOrder::BetaAlpha) result.chosen = c;
  return result;
}

}  // namespace clusterkit
