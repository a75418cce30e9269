// clusterkit: enumerate, mutate, Coxeter orbits, verifiers and the explorer
// server. Exit codes: 0 pass, 1 verification failure, 2 input error,
// 3 seed bound exceeded, 4 unsupported (infinite type).

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "clusterkit/coxeter.hpp"
#include "clusterkit/explorer.hpp"
#include "clusterkit/finite_type.hpp"
#include "clusterkit/quiver_io.hpp"

using namespace clusterkit;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kBound = 3, kUnsupported = 4 };

struct Options {
  std::string input;
  std::string format = "text";
  std::size_t max_seeds = kDefaultMaxSeeds;
  std::string seq;
  std::string m_range;
  std::string theorem;
  int port = kDefaultPort;
  std::string static_dir;
  bool list = false;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::vector<Index> parse_seq(const std::string& text, std::size_t n) {
  std::vector<Index> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long k = 0;
    try {
      k = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw Error(Errc::MalformedInput, "bad direction \"" + item + "\"");
    if (k < 1 || k > static_cast<long>(n))
      throw Error(Errc::IndexOutOfRange, "direction " + item + " outside 1.." + std::to_string(n));
    out.push_back(static_cast<Index>(k - 1));
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  try {
    if (colon != std::string::npos) {
      std::size_t a = 0, b = 0;
      const int lo = std::stoi(text.substr(0, colon), &a);
      const int hi = std::stoi(text.substr(colon + 1), &b);
      if (a == colon && b == text.size() - colon - 1 && lo <= 0 && hi >= 0) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw Error(Errc::MalformedInput, "--m-range must be lo:hi with lo <= 0 <= hi, got \"" + text + "\"");
}

std::string seed_text(const Seed& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.rank(); ++i) out += (i ? ", " : "") + s.vars[i].display();
  out += ")\n";
  for (const auto& row : s.matrix.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += "\n";
  }
  return out;
}

void print_enumeration(const ExchangeGraph& g, const Options& o) {
  if (json_out(o)) {
    std::cout << enumeration_json(g).dump() << "\n";
    return;
  }
  std::cout << g.cluster_count() << " clusters, " << g.variable_count() << " variables"
            << (g.truncated ? " (truncated)" : "") << "\n";
  if (o.list)
    for (const auto& x : g.variables) std::cout << x.display() << "\n";
}

int cmd_enumerate(const Options& o) {
  const QuiverSpec q = load_quiver_file(o.input);
  const ExchangeMatrix b = exchange_matrix_from(q.cartan, q.orientation);
  try {
    print_enumeration(enumerate_exchange_graph(b, o.max_seeds), o);
    return kPass;
  } catch (const BoundExceeded& e) {
    print_enumeration(e.partial(), o);
    std::cerr << e.what() << "\n";
    return kBound;
  }
}

int cmd_mutate(const Options& o) {
  const QuiverSpec q = load_quiver_file(o.input);
  const Seed start = initial_seed(exchange_matrix_from(q.cartan, q.orientation));
  const Seed s = mutate_along(start, parse_seq(o.seq, start.rank()));
  if (json_out(o))
    std::cout << seed_json(s).dump() << "\n";
  else
    std::cout << seed_text(s);
  return kPass;
}

Thm44Report run_thm44(const Options& o, const QuiverSpec& q) {
  if (!q.orientation.is_acyclic()) throw Error(Errc::CyclicOrientation, "orientation has a directed cycle");
  auto [lo, hi] = o.m_range.empty() ? default_thm44_range(q.cartan, q.orientation) : parse_range(o.m_range);
  return verify_thm44(q.cartan, q.orientation, lo, hi);
}

std::string period_note(const Thm44Report& r) {
  return r.period ? "period p=" + std::to_string(*r.period) : "no period within range";
}

int cmd_coxeter(const Options& o) {
  const QuiverSpec q = load_quiver_file(o.input);
  const Thm44Report r = run_thm44(o, q);
  for (const auto& row : r.rows) {
    if (json_out(o)) {
      std::cout << orbit_row_json(row).dump() << "\n";
      continue;
    }
    const bool ok = row.denominator_ok && row.positive_ok && row.content_free_ok;
    std::cout << "m=" << row.pos.m << " k=" << row.pos.k + 1 << "  " << row.variable.display() << "  dim "
              << row.dim.to_string() << "  " << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (!json_out(o)) {
    std::cout << r.rows.size() << " rows, " << r.distinct_variables << " distinct variables, " << period_note(r)
              << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  return r.passed() ? kPass : kFail;
}

template <class Report>
int finish(const Report& r, const json& j, const std::string& summary, const Options& o) {
  if (json_out(o)) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << summary << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  return r.passed() ? kPass : kFail;
}

int cmd_verify(const Options& o) {
  const QuiverSpec q = load_quiver_file(o.input);
  if (o.theorem == "thm44") {
    const Thm44Report r = run_thm44(o, q);
    return finish(r, thm44_json(r),
                  r.type + ", m in [" + std::to_string(r.m_from) + ", " + std::to_string(r.m_to) + "], " +
                      std::to_string(r.distinct_variables) + " distinct variables, " + period_note(r),
                  o);
  }
  if (o.theorem == "prop48") {
    const Prop48Report r = verify_prop48(q.cartan, q.orientation, kCalibratedPairing, o.max_seeds);
    return finish(r, prop48_json(r),
                  r.type + ", " + std::to_string(r.clusters_checked) + " clusters checked, " +
                      std::to_string(r.objects_checked) + " denominators",
                  o);
  }
  const AxiomReport r = verify_compatibility_axioms(RootSystem(q.cartan));
  return finish(r, axioms_json(r), r.type + ", " + std::to_string(r.pairs_checked) + " ordered pairs", o);
}

int cmd_serve(const Options& o) {
  SessionStore store;
  ExplorerServer server(store, o.static_dir);
  const int port = server.bind(o.port);
  std::cout << "listening on http://127.0.0.1:" << port << "/" << std::endl;
  server.run();
  return kPass;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BoundExceeded:
      return kBound;
    case Errc::InfiniteType:
      return kUnsupported;
    case Errc::VerificationFailed:
      return kFail;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cluster-algebra computations for acyclic valued quivers"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "quiver JSON file")->required();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "breadth-first exchange graph");
  add_common(enumerate);
  enumerate->add_option("--max-seeds", o.max_seeds, "seed bound")->check(CLI::PositiveNumber);
  enumerate->add_flag("--list", o.list, "print every cluster variable");

  auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence to the initial seed");
  add_common(mutate);
  mutate->add_option("--seq", o.seq, "directions k1,k2,... (1-based)");

  auto* coxeter = app.add_subcommand("coxeter", "T^m(u_k) table with denominator checks");
  add_common(coxeter);
  coxeter->add_option("--m-range", o.m_range, "lo:hi");

  auto* verify = app.add_subcommand("verify", "run a verifier");
  add_common(verify);
  verify->add_option("theorem", o.theorem, "thm44, prop48 or axioms")
      ->required()
      ->check(CLI::IsMember({"thm44", "prop48", "axioms"}));
  verify->add_option("--m-range", o.m_range, "lo:hi (thm44)");
  verify->add_option("--max-seeds", o.max_seeds, "seed bound (prop48)")->check(CLI::PositiveNumber);

  auto* serve = app.add_subcommand("serve", "explorer HTTP API on localhost");
  serve->add_option("--port", o.port, "port")->check(CLI::Range(0, 65535));
  serve->add_option("--static", o.static_dir, "directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*mutate) return cmd_mutate(o);
    if (*coxeter) return cmd_coxeter(o);
    if (*verify) return cmd_verify(o);
    return cmd_serve(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
