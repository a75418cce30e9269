#include "clusterkit/coxeter.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace clusterkit {

namespace {

std::vector<ReducedFraction> initial_window(std::size_t n) {
  std::vector<ReducedFraction> w;
  for (Index i = 0; i < n; ++i) w.push_back(ReducedFraction::indeterminate(n, i));
  return w;
}

void check_order(const CartanMatrix& cartan, const std::vector<Index>& order) {
  const std::size_t n = cartan.rank();
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw Error(Errc::MalformedInput, "order must list every vertex once");
  for (Index k : order) {
    if (k >= n || seen[k]) throw Error(Errc::MalformedInput, "order must list every vertex once");
    seen[k] = true;
  }
}

std::string pos_name(int m, Index k) { return "(m=" + std::to_string(m) + ", k=" + std::to_string(k + 1) + ")"; }

}  // namespace

std::vector<ReducedFraction> t_i_apply(const CartanMatrix& cartan, Index i, std::vector<ReducedFraction> vars) {
  const std::size_t n = cartan.rank();
  if (i >= n) throw Error(Errc::IndexOutOfRange, "slot " + std::to_string(i + 1));
  if (vars.size() != n) throw Error(Errc::MalformedInput, "window size differs from rank");
  ReducedFraction product = ReducedFraction::one(n);
  for (Index k = 0; k < n; ++k)
    if (k != i && cartan(i, k) < 0) product = product * vars[k].pow(static_cast<unsigned>(-cartan(i, k)));
  try {
    vars[i] = divide_exact(product + ReducedFraction::one(n), vars[i]);
  } catch (const NotDivisibleError& e) {
    throw Error(Errc::LaurentViolation, "T_" + std::to_string(i + 1) + " step (" + e.what() + ")");
  }
  return vars;
}

RootVector sigma_hat(const CartanMatrix& cartan, const std::vector<Index>& order, const RootVector& v) {
  RootVector out = v;
  for (Index k : order) out = truncated_reflection(cartan, k, out);
  return out;
}

RootVector sigma_hat_inverse(const CartanMatrix& cartan, const std::vector<Index>& order, const RootVector& v) {
  RootVector out = v;
  for (auto it = order.rbegin(); it != order.rend(); ++it) out = truncated_reflection(cartan, *it, out);
  return out;
}

RootVector preprojective_dim_vector(const CartanMatrix& cartan, const std::vector<Index>& order, int m, Index k) {
  check_order(cartan, order);
  if (k >= cartan.rank()) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(k + 1));
  RootVector v = RootVector::negative_simple(cartan.rank(), k);
  for (int s = 0; s < m; ++s) v = sigma_hat(cartan, order, v);
  for (int s = 0; s > m; --s) v = sigma_hat_inverse(cartan, order, v);
  return v;
}

std::optional<int> dim_orbit_period(const CartanMatrix& cartan, const std::vector<Index>& order, Index k, int cap) {
  const RootVector start = RootVector::negative_simple(cartan.rank(), k);
  RootVector v = start;
  for (int p = 1; p <= cap; ++p) {
    v = sigma_hat(cartan, order, v);
    if (v == start) return p;
  }
  return std::nullopt;
}

std::optional<int> coxeter_period(const CartanMatrix& cartan, const std::vector<Index>& order) {
  if (!cartan.is_finite_type()) return std::nullopt;
  check_order(cartan, order);
  const std::size_t n = cartan.rank();
  const int cap = static_cast<int>(2 * (cartan.type().positive_root_count() + n));
  const auto start = initial_window(n);
  auto window = start;
  for (int p = 1; p <= cap; ++p) {
    for (std::size_t t = n; t-- > 0;) window = t_i_apply(cartan, order[t], std::move(window));
    if (window == start) return p;
  }
  return std::nullopt;
}

CoxeterOrbit coxeter_orbit(const CartanMatrix& cartan, const std::vector<Index>& order, int m_from, int m_to) {
  if (m_from > 0 || m_to < 0) throw Error(Errc::MalformedInput, "orbit range must contain 0");
  check_order(cartan, order);
  const std::size_t n = cartan.rank();
  CoxeterOrbit out;
  out.m_from = m_from;
  out.m_to = m_to;
  const auto start = initial_window(n);
  for (Index k = 0; k < n; ++k) out.vars.emplace(OrbitPosition{0, k}, start[k]);

  auto step = [&](std::vector<ReducedFraction>& window, Index k, int m) {
    try {
      window = t_i_apply(cartan, k, std::move(window));
    } catch (const Error& e) {
      throw Error(Errc::WindowInconsistent, "recurrence at " + pos_name(m, k) + ": " + e.what());
    }
  };

  auto window = start;
  for (int m = 0; m < m_to; ++m) {
    for (std::size_t t = n; t-- > 0;) step(window, order[t], m + 1);
    if (window == start) {
      out.period = m + 1;
      break;
    }
    for (Index k = 0; k < n; ++k) out.vars.emplace(OrbitPosition{m + 1, k}, window[k]);
  }
  if (!out.period) {
    window = start;
    for (int m = 0; m > m_from; --m) {
      for (std::size_t t = 0; t < n; ++t) step(window, order[t], m - 1);
      if (window == start) {
        out.period = 1 - m;
        break;
      }
      for (Index k = 0; k < n; ++k) out.vars.emplace(OrbitPosition{m - 1, k}, window[k]);
    }
  }
  if (out.period) {
    // Close the table: every level reduces to one in [0, p) or already computed.
    const int p = *out.period;
    for (int m = m_from; m <= m_to; ++m) {
      if (out.vars.contains({m, 0})) continue;
      const int r = ((m % p) + p) % p;
      for (Index k = 0; k < n; ++k) {
        auto it = out.vars.find({r, k});
        if (it == out.vars.end()) it = out.vars.find({r - p, k});
        out.vars.emplace(OrbitPosition{m, k}, it->second);
      }
    }
  }
  return out;
}

DimTable ar_recursion_oracle(const CartanMatrix& cartan, const std::vector<Index>& order, int m_max) {
  if (m_max < 1) throw Error(Errc::MalformedInput, "m_max must be at least 1");
  check_order(cartan, order);
  const std::size_t n = cartan.rank();
  std::vector<std::size_t> pos(n);
  for (std::size_t t = 0; t < n; ++t) pos[order[t]] = t;

  DimTable table;
  for (Index k = 0; k < n; ++k) table.emplace(OrbitPosition{0, k}, RootVector::negative_simple(n, k));
  for (int m = 0; m < m_max; ++m) {
    for (std::size_t t = n; t-- > 0;) {
      const Index i = order[t];
      RootVector sum(n);
      for (Index j = 0; j < n; ++j) {
        if (!cartan.adjacent(i, j)) continue;
        const RootVector& d = table.at({pos[j] > t ? m + 1 : m, j});
        if (d.negative_simple_index()) continue;
        sum += static_cast<std::int64_t>(-cartan(i, j)) * d;
      }
      // Subtracting -alpha_t adds e_t: the wrap-around case.
      table.emplace(OrbitPosition{m + 1, i}, sum - table.at({m, i}));
    }
  }
  return table;
}

std::pair<int, int> default_thm44_range(const CartanMatrix& cartan, const Orientation& orientation) {
  if (cartan.is_finite_type()) {
    if (auto p = coxeter_period(cartan, admissible_sink_sequence(orientation))) return {-*p, *p};
  }
  return {-8, 8};
}

Thm44Report verify_thm44(const CartanMatrix& cartan, const Orientation& orientation, int m_from, int m_to,
                         ConventionOverride conventions) {
  if (m_from > 0 || m_to < 0) throw Error(Errc::MalformedInput, "verification range must contain 0");
  if (!orientation.is_acyclic()) throw Error(Errc::CyclicOrientation, "orientation has a directed cycle");
  const std::size_t n = cartan.rank();
  const auto order = admissible_sink_sequence(orientation);
  const CartanMatrix dim_cartan = conventions.transpose_reflection ? cartan.transposed() : cartan;
  const CartanMatrix exch_cartan = conventions.transpose_exchange ? cartan.transposed() : cartan;

  Thm44Report report;
  report.type = cartan.type().name();
  report.m_from = m_from;
  report.m_to = m_to;
  report.order = order;

  std::map<OrbitPosition, ReducedFraction> vars;
  std::map<OrbitPosition, RootVector> dims;
  const auto start = initial_window(n);
  for (Index k = 0; k < n; ++k) vars.emplace(OrbitPosition{0, k}, start[k]);

  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  // One direction of sweeps; forward uses positions n..1 and sigma_hat,
  // backward positions 1..n and its inverse.
  auto sweep = [&](bool forward, int levels) {
    auto window = start;
    auto omega = orientation;
    auto b = exchange_matrix_from(exch_cartan, omega);
    std::vector<RootVector> level_dims(n);
    for (Index k = 0; k < n; ++k) level_dims[k] = RootVector::negative_simple(n, k);
    for (int s = 0; s < levels; ++s) {
      const int m = forward ? s + 1 : -(s + 1);
      for (Index k = 0; k < n; ++k)
        level_dims[k] = forward ? sigma_hat(dim_cartan, order, level_dims[k])
                                : sigma_hat_inverse(dim_cartan, order, level_dims[k]);
      for (std::size_t c = 0; c < n; ++c) {
        const Index k = order[forward ? n - 1 - c : c];
        std::vector<ReducedFraction> next;
        try {
          next = t_i_apply(cartan, k, window);
        } catch (const Error& e) {
          fail("window step " + pos_name(m, k) + ": " + e.what());
          return;
        }
        ++report.steps_checked;
        if (next[k].denominator().values() !=
            std::vector<int>(level_dims[k].coords().begin(), level_dims[k].coords().end()))
          fail("window denominator at " + pos_name(m, k) + " is " + next[k].denominator().to_string() +
               ", expected " + level_dims[k].to_string());
        try {
          const Seed mutated = mutate_seed(Seed{window, b, {}}, k);
          if (mutated.vars != next) fail("seed mutation at " + pos_name(m, k) + " disagrees with T_" +
                                         std::to_string(k + 1));
          omega = reflect_orientation(omega, k);
          b = exchange_matrix_from(exch_cartan, omega);
          if (mutated.matrix != b)
            fail("mutated exchange matrix at " + pos_name(m, k) + " differs from the reflected orientation's");
        } catch (const Error& e) {
          fail("mutation route at " + pos_name(m, k) + ": " + e.what());
          return;
        }
        window = std::move(next);
      }
      for (Index k = 0; k < n; ++k) {
        vars.emplace(OrbitPosition{m, k}, window[k]);
        dims.emplace(OrbitPosition{m, k}, level_dims[k]);
      }
    }
  };

  try {
    for (Index k = 0; k < n; ++k) dims.emplace(OrbitPosition{0, k}, RootVector::negative_simple(n, k));
    sweep(true, m_to);
    sweep(false, -m_from);
  } catch (const Error& e) {
    fail(std::string("dimension vectors: ") + e.what());
  }

  std::unordered_map<std::string, RootVector> dim_of;
  std::map<RootVector, std::string> var_of;
  for (const auto& [pos, x] : vars) {
    auto dit = dims.find(pos);
    if (dit == dims.end()) continue;
    const RootVector& d = dit->second;
    Thm44Row row{pos, x, d};
    row.denominator_ok = x.denominator().values() == std::vector<int>(d.coords().begin(), d.coords().end());
    row.positive_ok = is_positive_polynomial(x.numerator()) ||
                      (x.initial_variable().has_value() && d.negative_simple_index().has_value());
    row.content_free_ok = x.is_content_free();
    if (!row.denominator_ok)
      fail("denominator at " + pos_name(pos.m, pos.k) + " is " + x.denominator().to_string() + ", expected " +
           d.to_string());
    if (!row.positive_ok) fail("numerator at " + pos_name(pos.m, pos.k) + " fails the positivity test");
    if (!row.content_free_ok) fail("numerator at " + pos_name(pos.m, pos.k) + " is divisible by some u_i");
    const std::string bytes = x.canonical_bytes();
    auto [vit, fresh_var] = dim_of.emplace(bytes, d);
    if (!fresh_var && vit->second != d)
      fail("variable " + x.display() + " appears with dimension vectors " + vit->second.to_string() + " and " +
           d.to_string());
    auto [rit, fresh_dim] = var_of.emplace(d, bytes);
    if (!fresh_dim && rit->second != bytes)
      fail("dimension vector " + d.to_string() + " carries two different variables");
    report.rows.push_back(std::move(row));
  }
  report.distinct_variables = dim_of.size();

  if (cartan.is_finite_type()) {
    report.period = coxeter_period(cartan, order);
  } else {
    for (int m = 1; m <= m_to && !report.period; ++m) {
      bool same = true;
      for (Index k = 0; k < n && same; ++k) same = vars.at({m, k}) == start[k];
      if (same) report.period = m;
    }
  }
  return report;
}

}  // namespace clusterkit
