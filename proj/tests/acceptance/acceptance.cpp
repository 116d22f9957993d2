// Acceptance checks, one line of output per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 7   run one
//
// Exit status is 0 iff every selected criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../support.hpp"
#include "clusternet/analysis.hpp"
#include "clusternet/basis_cache.hpp"
#include "clusternet/cluster.hpp"
#include "clusternet/colon.hpp"
#include "clusternet/groebner.hpp"
#include "clusternet/io.hpp"
#include "clusternet/oracle.hpp"
#include "clusternet/random_system.hpp"
#include "clusternet/reactions.hpp"

using namespace clusternet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << " s";
  return o.str();
}

std::string data_path(const std::string& name) {
  return std::string(CLUSTERNET_DATA_DIR) + "/" + name;
}

std::string fixture_path(const std::string& name) {
  return std::string(CLUSTERNET_FIXTURE_DIR) + "/" + name;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + CLUSTERNET_CLI + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kInitial = "2 MnO4- + 6 H+ + 5 H2C2O4";
const char* kFinal = "2 Mn2+ + 8 H2O + 10 CO2";

const std::vector<Coord> kExpectedGrading{8, 7, 1, 6, 1, 7, 5, 3, 1, 3,
                                          3, 11, 3, 7, 13, 13, 11, 12, 12};

struct Permanganate {
  BalanceMatrix matrix;
  Grading grading;
  ElementaryReactions reactions;
  TransitionSet ts;
  double seconds = 0;
};

Permanganate permanganate() {
  const auto t0 = Clock::now();
  Permanganate p;
  p.matrix = io::read_balance_matrix(data_path("permanganate.txt"));
  p.grading = find_positive_grading(p.matrix.rows);
  p.reactions = enumerate_elementary(p.matrix, p.grading);
  p.ts = partition_transitions(p.reactions.distinct, p.matrix.species,
                               p.grading);
  p.seconds = seconds_since(t0);
  return p;
}

std::vector<RandomSystem> family(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<RandomSystem> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_system(rng));
  return out;
}

GroebnerBasis basis_of(const std::vector<Move>& U, const TermOrder& order) {
  std::vector<Binomial> gens;
  for (const Move& u : U) {
    if (auto b = binomial_from_move(u, order)) gens.push_back(*b);
  }
  return buchberger(gens, order);
}

std::uint64_t g_seed = 20240601;

// 1 ---------------------------------------------------------------------------

Outcome reaction_enumeration() {
  const auto p = permanganate();
  const auto systems = p.reactions.systems.size();
  const auto distinct = p.reactions.count(CountingConvention::Distinct);
  const auto per_system = p.reactions.count(CountingConvention::PerSystem);
  std::ostringstream d;
  d << "systems " << systems << " (want 209), distinct reactions " << distinct
    << " (want 1022; per-system count " << per_system << "), |U| "
    << p.ts.reversible.size() << ", |D| " << p.ts.irreversible.size()
    << ", " << fmt_seconds(p.seconds) << " (limit 60 s)";
  return {systems == 209 && distinct == 1022 &&
              2 * p.ts.reversible.size() + p.ts.irreversible.size() == 1022 &&
              p.seconds < 60.0,
          d.str()};
}

// 2 ---------------------------------------------------------------------------

Outcome positive_grading() {
  const auto A = io::read_balance_matrix(data_path("permanganate.txt"));
  const auto g = find_positive_grading(A.rows);
  const auto& got = g.rows().front();
  std::ostringstream d;
  d << "grading (";
  for (std::size_t i = 0; i < got.size(); ++i) d << (i ? "," : "") << got[i];
  d << ")";
  return {g.row_count() == 1 && got == kExpectedGrading, d.str()};
}

// 3 ---------------------------------------------------------------------------

Outcome basis_connectivity_oracle() {
  const auto t0 = Clock::now();
  std::size_t pairs = 0, bad = 0, systems = 0;
  for (const auto& rs : family(g_seed + 3, 500)) {
    const auto& ts = rs.transitions;
    const auto& g = ts.grading.rows().front();
    const auto cache = build_cache(ts);
    for (Coord degree = 1; degree <= 4; ++degree) {
      const auto fiber = testing::brute_fiber(g, degree);
      const auto comp = testing::brute_components(fiber, ts.reversible);
      for (const auto& y : fiber) {
        for (const auto& z : fiber) {
          const bool want = comp.at(y) == comp.at(z);
          if (is_connected(y, z, cache.base()) != want) ++bad;
          ++pairs;
        }
      }
    }
    ++systems;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << systems << " systems, " << pairs << " same-degree pairs, " << bad
    << " mismatches, " << fmt_seconds(secs) << " (limit 300 s)";
  return {systems >= 500 && bad == 0 && secs < 300.0, d.str()};
}

// 4 ---------------------------------------------------------------------------

Outcome colon_connectivity_oracle() {
  std::mt19937_64 rng(g_seed + 4);
  std::size_t pairs = 0, bad = 0, systems = 0;
  for (const auto& rs : family(g_seed + 40, 500)) {
    const auto& ts = rs.transitions;
    const auto& g = ts.grading.rows().front();
    const std::size_t n = g.size();
    const auto base =
        basis_of(ts.reversible, BasisCache::default_order(ts.grading));
    std::vector<Coord> raw(n);
    for (auto& x : raw) x = static_cast<Coord>(rng() % 3);
    const Exponent dbar(raw);
    const auto V = colon_by_monomial(base, dbar, g);
    const Coord shift = testing::dot(g, dbar);
    for (Coord extra = 0; extra <= 3; ++extra) {
      const Coord degree = shift + extra;
      const auto fiber = testing::brute_fiber(g, degree);
      const auto comp_u = testing::brute_components(fiber, ts.reversible);
      const auto low = testing::brute_fiber(g, extra);
      const auto comp_v = testing::brute_binomial_components(low, V);
      std::vector<Exponent> above;
      for (const auto& y : fiber) {
        if (divides(dbar, y)) above.push_back(y);
      }
      for (const auto& y : above) {
        for (const auto& z : above) {
          const bool lhs = comp_u.at(y) == comp_u.at(z);
          const bool rhs =
              comp_v.at(subtract(y, dbar)) == comp_v.at(subtract(z, dbar));
          if (lhs != rhs) ++bad;
          ++pairs;
        }
      }
    }
    ++systems;
  }
  std::ostringstream d;
  d << systems << " systems, " << pairs << " shifted pairs, " << bad
    << " mismatches";
  return {systems >= 500 && pairs > 0 && bad == 0, d.str()};
}

// 5 ---------------------------------------------------------------------------

Outcome cct_oracle() {
  std::mt19937_64 rng(g_seed + 5);
  std::size_t queries = 0, found = 0, bad = 0, unsound = 0, systems = 0;
  for (const auto& rs : family(g_seed + 50, 500)) {
    const auto& ts = rs.transitions;
    const auto& g = ts.grading.rows().front();
    const std::size_t n = g.size();
    const auto cache = build_cache(ts);
    for (int k = 0; k < 3; ++k) {
      Move d(n);
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<Coord>(rng() % 5) - 2;
      }
      const Coord degree = 1 + static_cast<Coord>(rng() % 4);
      const auto fiber = testing::brute_fiber(g, degree);
      const auto comp = testing::brute_components(fiber, ts.reversible);
      std::set<std::size_t> can_fire;
      for (const auto& z : fiber) {
        if (apply_move(z, d)) can_fire.insert(comp.at(z));
      }
      for (const auto& y : fiber) {
        const bool want = can_fire.count(comp.at(y)) > 0;
        const auto got = cct(cache, y, d);
        if (got.has_value() != want) ++bad;
        if (got) {
          ++found;
          const bool member = comp.count(*got) && comp.at(*got) == comp.at(y);
          if (!member || !apply_move(*got, d)) ++unsound;
        }
        ++queries;
      }
    }
    ++systems;
  }
  std::ostringstream d;
  d << systems << " systems, " << queries << " queries (" << found
    << " with a witness), " << bad << " existence mismatches, " << unsound
    << " unsound witnesses";
  return {systems >= 500 && bad == 0 && unsound == 0, d.str()};
}

// 6 ---------------------------------------------------------------------------

struct Instance {
  std::string name;
  TransitionSet ts;
  std::vector<Exponent> initial;
};

std::vector<Instance> fixtures() {
  std::vector<Instance> out;
  out.push_back({"toy", testing::toy_system(), {{1, 0, 0}}});
  out.push_back({"diamond", testing::diamond_system(), {{1, 0, 0, 0}}});
  out.push_back({"two-route", testing::two_route_system(), {{1, 0, 0, 0}}});
  const auto m = io::read_model(fixture_path("single_witness_gap.json"));
  auto ts = m.transitions();
  out.push_back({"single-witness-gap", ts, {io::parse_state("x3", ts.species)}});
  return out;
}

Outcome cgr_oracle() {
  std::vector<Instance> all = fixtures();
  std::size_t index = 0;
  for (auto& rs : family(g_seed + 6, 300)) {
    all.push_back({"random#" + std::to_string(index++), std::move(rs.transitions),
                   std::move(rs.initial)});
  }
  std::size_t exhaustive_bad = 0, gap_systems = 0, missing_arcs = 0,
              missing_nodes = 0, invented = 0, unexplained = 0;
  std::string first_failure;
  for (const auto& inst : all) {
    const auto cache = build_cache(inst.ts);
    const auto states = oracle::explore(inst.ts, inst.initial, 100000);
    const auto expected =
        oracle::cluster_graph(states, inst.ts, cache.base().order());

    CgrOptions full_opts;
    full_opts.exhaustive = true;
    const auto full = cgr(inst.ts, inst.initial, cache, full_opts);
    if (!compare_graphs(expected, full).empty()) {
      ++exhaustive_bad;
      if (first_failure.empty()) first_failure = inst.name;
    }

    const auto plain = cgr(inst.ts, inst.initial, cache);
    const auto diff = compare_graphs(expected, plain);
    invented += diff.extra_nodes.size() + diff.extra_arcs.size();
    if (diff.empty()) continue;
    ++gap_systems;
    missing_nodes += diff.missing_nodes.size();
    missing_arcs += diff.missing_arcs.size();
    // Each missing arc is either downstream of an earlier gap or the one
    // witness tried for its label lands in another cluster.
    for (const auto& [src, dst, label] : diff.missing_arcs) {
      if (!plain.find(src)) continue;
      const auto w = cct(cache, src, label);
      const auto next = w ? apply_move(*w, label) : std::nullopt;
      if (!next || normal_form(*next, cache.base()) == dst) {
        ++unexplained;
        if (first_failure.empty()) first_failure = inst.name;
      }
    }
  }
  std::ostringstream d;
  d << all.size() << " systems (" << all.size() - 300
    << " fixtures): exhaustive mismatches " << exhaustive_bad
    << "; default mode: " << gap_systems << " systems with gaps, "
    << missing_arcs << " missing arcs, " << missing_nodes
    << " missing nodes, " << invented << " invented, " << unexplained
    << " not explained by the single-witness choice";
  if (!first_failure.empty()) d << "; first failure " << first_failure;
  return {exhaustive_bad == 0 && invented == 0 && unexplained == 0 &&
              gap_systems >= 1,
          d.str()};
}

// 7 ---------------------------------------------------------------------------

Outcome permanganate_end_to_end() {
  const auto t0 = Clock::now();
  const auto p = permanganate();
  const auto s = io::parse_state(kInitial, p.ts.species);
  const auto t = io::parse_state(kFinal, p.ts.species);

  const auto t1 = Clock::now();
  const auto cache = build_cache(p.ts);
  const double basis_secs = seconds_since(t1);
  const auto t2 = Clock::now();
  const std::vector<Exponent> S{s};
  const auto graph = cgr(p.ts, S, cache);
  const double graph_secs = seconds_since(t2);

  const bool lib_connected = connected(graph, s, t, cache.base()).connected;
  const bool final_absent = !graph.find(normal_form(t, cache.base()));

  const auto model = io::read_model(data_path("permanganate.json"));
  const bool model_matches = model.transitions() == p.ts;

  const fs::path dir = fs::temp_directory_path() /
                       ("clusternet_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string g = (dir / "graph.json").string();
  const int built = run_cli("graph build --model \"" +
                            data_path("permanganate.json") + "\" --initial \"" +
                            kInitial + "\" -o \"" + g + "\"");
  const int cli_connect = run_cli("connect --graph \"" + g + "\" --from \"" +
                                  kInitial + "\" --to \"" + kFinal + "\"");
  fs::remove_all(dir);
  const double total = seconds_since(t0);

  std::ostringstream d;
  d << "reactions " << p.reactions.distinct.size() << ", base basis "
    << cache.base().size() << " elements, " << cache.size()
    << " cached bases in " << fmt_seconds(basis_secs) << ", graph "
    << graph.nodes().size() << " nodes / " << graph.arcs().size()
    << " arcs in " << fmt_seconds(graph_secs) << ", library connected="
    << (lib_connected ? "yes" : "no") << ", CLI connect exit " << cli_connect
    << " (want 1), total " << fmt_seconds(total) << " (limit 900 s)";
  return {!lib_connected && final_absent && model_matches && built == 0 &&
              cli_connect == 1 && total <= 900.0,
          d.str()};
}

// 8 ---------------------------------------------------------------------------

Outcome hilbert_bound() {
  std::vector<Instance> all = fixtures();
  for (auto& rs : family(g_seed + 8, 300)) {
    all.push_back({"random", std::move(rs.transitions), std::move(rs.initial)});
  }
  const auto p = permanganate();
  all.push_back({"permanganate", p.ts,
                 {io::parse_state(kInitial, p.ts.species)}});

  std::size_t checked = 0, violations = 0;
  std::uint64_t toy_bound = 0, perm_bound = 0;
  std::size_t toy_nodes = 0, perm_nodes = 0;
  for (const auto& inst : all) {
    const auto cache = build_cache(inst.ts);
    CgrOptions o;
    o.exhaustive = inst.name != "permanganate";
    const auto graph = cgr(inst.ts, inst.initial, cache, o);
    const auto& g = inst.ts.grading.rows().front();
    for (const auto& s : inst.initial) {
      const auto bound = cluster_count_bound(cache.base(), inst.ts.grading, s,
                                             10'000'000);
      std::size_t nodes = 0;
      for (const auto& rep : graph.nodes()) {
        if (testing::dot(g, rep) == testing::dot(g, s)) ++nodes;
      }
      if (nodes > bound) ++violations;
      ++checked;
      if (inst.name == "toy") toy_bound = bound, toy_nodes = nodes;
      if (inst.name == "permanganate") perm_bound = bound, perm_nodes = nodes;
    }
  }
  std::ostringstream d;
  d << checked << " initial states on " << all.size() << " instances, "
    << violations << " violations; toy bound " << toy_bound << " / nodes "
    << toy_nodes << " (want 2 / 2); permanganate bound " << perm_bound
    << " / nodes " << perm_nodes;
  return {violations == 0 && toy_bound == 2 && toy_nodes == 2, d.str()};
}

// 9 ---------------------------------------------------------------------------

std::size_t dfs_paths(const ClusterGraph& g, std::size_t s, std::size_t t,
                      std::size_t skip_arc) {
  std::vector<bool> on(g.nodes().size(), false);
  std::function<std::size_t(std::size_t)> rec = [&](std::size_t u) {
    if (u == t) return std::size_t{1};
    on[u] = true;
    std::size_t total = 0;
    for (std::size_t a = 0; a < g.arcs().size(); ++a) {
      const auto& arc = g.arcs()[a];
      if (a != skip_arc && arc.source == u && !on[arc.target]) {
        total += rec(arc.target);
      }
    }
    on[u] = false;
    return total;
  };
  return rec(s);
}

Outcome path_analysis() {
  const auto ts = testing::diamond_system();
  const auto cache = build_cache(ts);
  const Exponent s{1, 0, 0, 0}, t{0, 0, 0, 1};
  const std::vector<Exponent> S{s};
  const auto graph = cgr(ts, S, cache);
  const auto paths = enumerate_paths(graph, s, t, 1000, cache.base());
  const auto ess = essential_arcs(graph, s, t, cache.base());

  const auto from = graph.find(normal_form(s, cache.base()));
  const auto to = graph.find(normal_form(t, cache.base()));
  const auto b = graph.find(Exponent{0, 0, 1, 0});
  if (!from || !to || !b) return {false, "diamond graph lacks expected nodes"};
  const std::size_t none = graph.arcs().size();
  const std::size_t brute = dfs_paths(graph, *from, *to, none);
  std::set<std::size_t> brute_ess;
  for (std::size_t a = 0; a < graph.arcs().size(); ++a) {
    if (dfs_paths(graph, *from, *to, a) == 0) brute_ess.insert(a);
  }

  bool ess_ok = ess.size() == 1;
  if (ess_ok) {
    const auto& arc = graph.arcs()[ess[0].arc];
    ess_ok = arc.source == *b && arc.target == *to && ess[0].unique_label &&
             brute_ess == std::set<std::size_t>{ess[0].arc};
  }
  std::ostringstream d;
  d << "paths " << paths.paths.size() << " (brute " << brute
    << ", want 2), essential arcs " << ess.size() << " (brute "
    << brute_ess.size() << ", want exactly B -> C with a unique label)";
  return {paths.paths.size() == 2 && brute == 2 && !paths.truncated && ess_ok,
          d.str()};
}

// 10 --------------------------------------------------------------------------

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() /
                       ("clusternet_determinism_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  int bad_exit = 0;
  for (const char* name : {"first.json", "second.json"}) {
    const auto path = (dir / name).string();
    if (run_cli("graph build --model \"" + data_path("permanganate.json") +
                "\" --initial \"" + kInitial + "\" -o \"" + path + "\"") != 0) {
      ++bad_exit;
    }
    outputs.push_back(slurp(path));
  }
  fs::remove_all(dir);
  const bool same = outputs[0] == outputs[1] && !outputs[0].empty();
  std::ostringstream d;
  d << "two graph builds, " << outputs[0].size() << " and "
    << outputs[1].size() << " bytes, " << (same ? "identical" : "DIFFERENT");
  return {bad_exit == 0 && same, d.str()};
}

struct Criterion {
  int number;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "elementary reaction enumeration", reaction_enumeration},
    {2, "positive grading", positive_grading},
    {3, "basis connectivity equals oracle connectivity", basis_connectivity_oracle},
    {4, "colon connectivity equals shifted oracle connectivity",
     colon_connectivity_oracle},
    {5, "connectivity test equals oracle", cct_oracle},
    {6, "cluster graph equals oracle", cgr_oracle},
    {7, "permanganate end to end", permanganate_end_to_end},
    {8, "cluster count bound", hilbert_bound},
    {9, "path analysis on the diamond", path_analysis},
    {10, "deterministic graph files", determinism},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion (1-10)")
      ->check(CLI::Range(1, 10));
  app.add_option("--seed", g_seed, "Base seed for random systems");
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number
              << ": " << c.title << ": " << o.detail << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
