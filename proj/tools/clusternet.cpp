// clusternet: cluster graphs of chemical reaction networks.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clusternet/analysis.hpp"
#include "clusternet/cluster.hpp"
#include "clusternet/error.hpp"
#include "clusternet/io.hpp"
#include "clusternet/kernels.hpp"
#include "clusternet/oracle.hpp"
#include "clusternet/parallel.hpp"
#include "clusternet/random_system.hpp"

namespace cn = clusternet;
namespace io = clusternet::io;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

class UsageError : public cn::Error {
 public:
  using cn::Error::Error;
};

struct Globals {
  std::size_t threads = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string isa;
};

std::size_t thread_count(const Globals& g) {
  return g.threads ? g.threads : cn::default_thread_count();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cn::Error("cannot write " + path);
  out << text;
}

std::string vector_text(const std::vector<cn::Coord>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void require_format(const Globals& g, std::initializer_list<const char*> ok) {
  for (const char* f : ok) {
    if (g.format == f) return;
  }
  throw UsageError("--format " + g.format + " is not supported here");
}

// --- Model-backed context ----------------------------------------------------

struct ModelContext {
  io::ModelFile model;
  cn::TransitionSet ts;

  static ModelContext load(const std::string& path, std::size_t threads) {
    ModelContext c;
    c.model = io::read_model(path);
    c.ts = c.model.transitions(2, threads);
    return c;
  }

  cn::Exponent state(const std::string& expr) const {
    return io::parse_state(expr, ts.species);
  }
  std::string format(const cn::Exponent& x) const {
    return io::format_state(x, ts.species);
  }
  cn::BasisCache base_cache(std::size_t threads) const {
    return cn::BasisCache::build(ts.reversible, ts.grading, {}, threads);
  }
};

std::vector<cn::Exponent> parse_states(const std::vector<std::string>& exprs,
                                       const std::vector<std::string>& species) {
  std::vector<cn::Exponent> out;
  for (const auto& e : exprs) out.push_back(io::parse_state(e, species));
  return out;
}

// --- reactions gen -----------------------------------------------------------

struct ReactionsGenArgs {
  std::string matrix;
  std::size_t max_reactants = 2;
  std::string output;
};

int reactions_gen(const Globals& g, const ReactionsGenArgs& a) {
  require_format(g, {"text", "json"});
  const cn::BalanceMatrix A = io::read_balance_matrix(a.matrix);
  const auto start = std::chrono::steady_clock::now();
  cn::Grading grading = cn::find_positive_grading(A.rows);
  const auto reactions = cn::enumerate_elementary(
      A, grading, a.max_reactants, 1'000'000, thread_count(g));
  cn::TransitionSet ts =
      cn::partition_transitions(reactions.distinct, A.species, grading);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  io::ModelFile model;
  model.species = A.species;
  model.balance_matrix = A;
  model.reversible = ts.reversible;
  model.irreversible = ts.irreversible;
  model.grading = grading;
  if (!a.output.empty()) io::write_model(a.output, model);

  const auto per_system = reactions.count(cn::CountingConvention::PerSystem);
  const auto distinct = reactions.count(cn::CountingConvention::Distinct);
  if (g.format == "json") {
    std::cout << io::dump(Json{{"systems", reactions.systems.size()},
                               {"solutions_per_system", per_system},
                               {"solutions_distinct", distinct},
                               {"reversible", ts.reversible.size()},
                               {"irreversible", ts.irreversible.size()},
                               {"grading", grading.rows()}});
  } else {
    std::cout << "systems: " << reactions.systems.size() << "\n"
              << "solutions (per system): " << per_system << "\n"
              << "solutions (distinct): " << distinct << "\n"
              << "reversible: " << ts.reversible.size() << "\n"
              << "irreversible: " << ts.irreversible.size() << "\n"
              << "grading: " << vector_text(grading.rows().front()) << "\n"
              << "seconds: " << seconds << "\n";
  }
  return kExitOk;
}

// --- grading -----------------------------------------------------------------

struct GradingArgs {
  std::string model;
  std::string matrix;
};

int grading_find(const Globals& g, const GradingArgs& a) {
  require_format(g, {"text", "json"});
  cn::IntMatrix rows;
  if (!a.matrix.empty()) {
    rows = io::read_balance_matrix(a.matrix).rows;
  } else if (!a.model.empty()) {
    const auto model = io::read_model(a.model);
    if (!model.balance_matrix) {
      throw UsageError("model has no balance matrix to derive a grading from");
    }
    rows = model.balance_matrix->rows;
  } else {
    throw UsageError("grading find needs --model or --matrix");
  }
  const cn::Grading grading = cn::find_positive_grading(rows);
  if (g.format == "json") {
    std::cout << io::dump(Json{{"grading", grading.rows()}});
  } else {
    std::cout << vector_text(grading.rows().front()) << "\n";
  }
  return kExitOk;
}

int grading_check(const Globals& g, const GradingArgs& a) {
  require_format(g, {"text", "json"});
  if (a.model.empty()) throw UsageError("grading check needs --model");
  const auto model = io::read_model(a.model);
  const cn::Grading grading = model.resolve_grading();
  std::size_t bad = 0, total = 0;
  for (const auto* list : {&model.reversible, &model.irreversible}) {
    if (!*list) continue;
    for (const cn::Move& m : **list) {
      ++total;
      if (!grading.is_homogeneous(m)) ++bad;
    }
  }
  if (g.format == "json") {
    std::cout << io::dump(Json{{"grading", grading.rows()},
                               {"transitions", total},
                               {"inhomogeneous", bad},
                               {"ok", bad == 0}});
  } else {
    std::cout << "grading: " << vector_text(grading.rows().front()) << "\n"
              << "transitions checked: " << total << "\n"
              << "inhomogeneous: " << bad << "\n"
              << (bad == 0 ? "ok" : "FAILED") << "\n";
  }
  return bad == 0 ? kExitOk : kExitNo;
}

// --- cluster eq / repr -------------------------------------------------------

struct ClusterArgs {
  std::string model;
  std::vector<std::string> states;
};

int cluster_eq(const Globals& g, const ClusterArgs& a) {
  require_format(g, {"text", "json"});
  if (a.states.size() != 2) throw UsageError("cluster eq needs two --state");
  const auto ctx = ModelContext::load(a.model, thread_count(g));
  const auto y = ctx.state(a.states[0]);
  const auto z = ctx.state(a.states[1]);
  const auto cache = ctx.base_cache(thread_count(g));
  const bool same = cn::is_connected(y, z, cache.base());
  if (g.format == "json") {
    std::cout << io::dump(Json{{"same_cluster", same}});
  } else {
    std::cout << (same ? "same cluster" : "different clusters") << "\n";
  }
  return same ? kExitOk : kExitNo;
}

int cluster_repr(const Globals& g, const ClusterArgs& a) {
  require_format(g, {"text", "json"});
  if (a.states.size() != 1) throw UsageError("cluster repr needs one --state");
  const auto ctx = ModelContext::load(a.model, thread_count(g));
  const auto cache = ctx.base_cache(thread_count(g));
  const auto rep = cn::normal_form(ctx.state(a.states[0]), cache.base());
  if (g.format == "json") {
    std::cout << io::dump(
        Json{{"rep", rep.values()}, {"label", ctx.format(rep)}});
  } else {
    std::cout << ctx.format(rep) << "\n" << cn::to_string(rep) << "\n";
  }
  return kExitOk;
}

// --- graph build -------------------------------------------------------------

struct GraphBuildArgs {
  std::string model;
  std::vector<std::string> initial;
  bool exhaustive = false;
  std::size_t node_cap = 0;
  std::string output;
  std::string dot;
};

int graph_build(const Globals& g, const GraphBuildArgs& a) {
  require_format(g, {"text", "json", "csv", "dot"});
  const std::size_t threads = thread_count(g);
  const auto ctx = ModelContext::load(a.model, threads);
  const auto initial = parse_states(a.initial, ctx.ts.species);

  const auto t0 = std::chrono::steady_clock::now();
  const cn::BasisCache cache = cn::build_cache(ctx.ts, threads);
  const auto t1 = std::chrono::steady_clock::now();
  cn::CgrOptions options;
  options.exhaustive = a.exhaustive;
  options.threads = threads;
  options.node_cap = a.node_cap ? a.node_cap : ctx.model.cap("node_cap", 100'000);
  options.arc_cap = ctx.model.cap("arc_cap", 1'000'000);
  options.member_cap = ctx.model.cap("member_cap", 1'000'000);
  io::GraphDocument doc;
  doc.species = ctx.ts.species;
  doc.grading = ctx.ts.grading;
  doc.order = cache.base().order();
  const auto elements = cache.base().elements();
  doc.basis.assign(elements.begin(), elements.end());
  doc.initial_states = initial;
  doc.mode = a.exhaustive ? "exhaustive" : "default";
  doc.graph = cn::cgr(ctx.ts, initial, cache, options);
  const auto t2 = std::chrono::steady_clock::now();

  std::string body;
  if (g.format == "csv") {
    body = io::arcs_to_csv(doc);
  } else if (g.format == "dot") {
    body = io::to_dot(doc);
  } else {
    body = io::dump(io::to_json(doc));
  }
  if (!a.output.empty()) {
    write_text(a.output, body);
  } else if (g.format != "text") {
    std::cout << body;
  }
  if (!a.dot.empty()) write_text(a.dot, io::to_dot(doc));

  auto secs = [](auto d) { return std::chrono::duration<double>(d).count(); };
  // With the graph itself on stdout, the summary moves to stderr.
  std::ostream& summary =
      (g.format == "text" || !a.output.empty()) ? std::cout : std::cerr;
  summary << "basis elements: " << cache.base().size() << "\n"
          << "cached bases: " << cache.size() << "\n"
          << "nodes: " << doc.graph.nodes().size() << "\n"
          << "arcs: " << doc.graph.arcs().size() << "\n"
          << "basis seconds: " << secs(t1 - t0) << "\n"
          << "graph seconds: " << secs(t2 - t1) << "\n";
  return kExitOk;
}

// --- queries on a saved graph ------------------------------------------------

struct QueryArgs {
  std::string graph;
  std::string from;
  std::string to;
  std::size_t max_paths = 1000;
};

struct GraphContext {
  io::GraphDocument doc;
  cn::GroebnerBasis basis = cn::GroebnerBasis(cn::TermOrder::degrevlex(0), {});
  cn::Exponent from;
  cn::Exponent to;

  static GraphContext load(const QueryArgs& a) {
    GraphContext c;
    c.doc = io::read_graph(a.graph);
    c.basis = c.doc.groebner_basis();
    c.from = io::parse_state(a.from, c.doc.species);
    c.to = io::parse_state(a.to, c.doc.species);
    return c;
  }
  std::string reaction(std::size_t arc) const {
    return io::format_reaction(doc.graph.arcs()[arc].label, doc.species);
  }
  Json path_json(const cn::ArcPath& path) const {
    Json steps = Json::array();
    for (std::size_t a : path) {
      const auto& arc = doc.graph.arcs()[a];
      steps.push_back(Json{{"arc", a},
                           {"source", arc.source},
                           {"target", arc.target},
                           {"reaction", reaction(a)}});
    }
    return steps;
  }
  std::string path_text(const cn::ArcPath& path) const {
    if (path.empty()) return "(same cluster)";
    std::string s;
    for (std::size_t a : path) {
      if (!s.empty()) s += " ; ";
      s += reaction(a);
    }
    return s;
  }
};

int connect(const Globals& g, const QueryArgs& a) {
  require_format(g, {"text", "json", "dot"});
  const auto c = GraphContext::load(a);
  const auto r = cn::connected(c.doc.graph, c.from, c.to, c.basis);
  if (g.format == "json") {
    Json j{{"connected", r.connected}};
    if (r.shortest_path) j["shortest_path"] = c.path_json(*r.shortest_path);
    std::cout << io::dump(j);
  } else if (g.format == "dot") {
    std::vector<std::size_t> hl;
    if (r.shortest_path) hl = *r.shortest_path;
    std::cout << io::to_dot(c.doc, hl);
  } else {
    std::cout << (r.connected ? "connected" : "not connected") << "\n";
    if (r.shortest_path) {
      std::cout << "shortest path (" << r.shortest_path->size()
                << " arcs): " << c.path_text(*r.shortest_path) << "\n";
    }
  }
  return r.connected ? kExitOk : kExitNo;
}

int paths(const Globals& g, const QueryArgs& a) {
  require_format(g, {"text", "json", "csv", "dot"});
  const auto c = GraphContext::load(a);
  const auto r =
      cn::enumerate_paths(c.doc.graph, c.from, c.to, a.max_paths, c.basis);
  if (g.format == "json") {
    Json list = Json::array();
    for (const auto& p : r.paths) list.push_back(c.path_json(p));
    std::cout << io::dump(Json{{"count", r.paths.size()},
                               {"truncated", r.truncated},
                               {"paths", std::move(list)}});
  } else if (g.format == "csv") {
    std::cout << "path,step,arc,source,target\n";
    for (std::size_t p = 0; p < r.paths.size(); ++p) {
      for (std::size_t s = 0; s < r.paths[p].size(); ++s) {
        const auto& arc = c.doc.graph.arcs()[r.paths[p][s]];
        std::cout << p << ',' << s << ',' << r.paths[p][s] << ','
                  << arc.source << ',' << arc.target << '\n';
      }
    }
  } else if (g.format == "dot") {
    std::set<std::size_t> used;
    for (const auto& p : r.paths) used.insert(p.begin(), p.end());
    const std::vector<std::size_t> hl(used.begin(), used.end());
    std::cout << io::to_dot(c.doc, hl);
  } else {
    std::cout << "paths: " << r.paths.size()
              << (r.truncated ? " (truncated)" : "") << "\n";
    for (std::size_t p = 0; p < r.paths.size(); ++p) {
      std::cout << p + 1 << ": " << c.path_text(r.paths[p]) << "\n";
    }
  }
  return kExitOk;
}

int essential(const Globals& g, const QueryArgs& a) {
  require_format(g, {"text", "json", "dot"});
  const auto c = GraphContext::load(a);
  const auto arcs = cn::essential_arcs(c.doc.graph, c.from, c.to, c.basis);
  if (g.format == "json") {
    Json list = Json::array();
    for (const auto& e : arcs) {
      const auto& arc = c.doc.graph.arcs()[e.arc];
      list.push_back(Json{{"arc", e.arc},
                          {"source", arc.source},
                          {"target", arc.target},
                          {"reaction", c.reaction(e.arc)},
                          {"unique_label", e.unique_label}});
    }
    std::cout << io::dump(Json{{"essential", std::move(list)}});
  } else if (g.format == "dot") {
    std::vector<std::size_t> hl;
    for (const auto& e : arcs) hl.push_back(e.arc);
    std::cout << io::to_dot(c.doc, hl);
  } else {
    std::cout << "essential arcs: " << arcs.size() << "\n";
    for (const auto& e : arcs) {
      const auto& arc = c.doc.graph.arcs()[e.arc];
      std::cout << "n" << arc.source << " -> n" << arc.target << ": "
                << c.reaction(e.arc)
                << (e.unique_label ? " [occurs in every decomposition]" : "")
                << "\n";
    }
  }
  return kExitOk;
}

// --- bound / verify ----------------------------------------------------------

struct BoundArgs {
  std::string model;
  std::string state;
  std::size_t cap = 10'000'000;
};

int bound(const Globals& g, const BoundArgs& a) {
  require_format(g, {"text", "json"});
  const auto ctx = ModelContext::load(a.model, thread_count(g));
  const auto cache = ctx.base_cache(thread_count(g));
  const auto b = cn::cluster_count_bound(cache.base(), ctx.ts.grading,
                                         ctx.state(a.state), a.cap);
  if (g.format == "json") {
    std::cout << io::dump(Json{{"bound", b}});
  } else {
    std::cout << b << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string model;
  std::vector<std::string> initial;
  std::size_t state_cap = 200'000;
  bool exhaustive = false;
  std::size_t random = 0;
};

Json diff_json(const cn::GraphDiff& d) {
  return Json{{"missing_nodes", d.missing_nodes.size()},
              {"extra_nodes", d.extra_nodes.size()},
              {"missing_arcs", d.missing_arcs.size()},
              {"extra_arcs", d.extra_arcs.size()}};
}

bool check_passes(const cn::oracle::CrossCheck& r, bool exhaustive) {
  return r.clusters_agree() &&
         (exhaustive ? r.exhaustive_diff : r.default_diff).empty();
}

Json check_json(const cn::oracle::CrossCheck& r) {
  return Json{{"states", r.states},
              {"clusters", r.clusters},
              {"split_clusters", r.split_clusters},
              {"merged_clusters", r.merged_clusters},
              {"wrong_representatives", r.wrong_representatives},
              {"default", diff_json(r.default_diff)},
              {"exhaustive", diff_json(r.exhaustive_diff)}};
}

int verify(const Globals& g, const VerifyArgs& a) {
  require_format(g, {"text", "json"});
  const std::size_t threads = thread_count(g);
  Json report = Json::array();
  bool ok = true;
  auto run = [&](const cn::TransitionSet& ts,
                 const std::vector<cn::Exponent>& initial,
                 const std::string& name) {
    const cn::BasisCache cache = cn::build_cache(ts, threads);
    const auto r =
        cn::oracle::cross_check(ts, initial, cache, a.state_cap, threads);
    const bool pass = check_passes(r, a.exhaustive);
    ok = ok && pass;
    Json j = check_json(r);
    j["name"] = name;
    j["pass"] = pass;
    report.push_back(j);
    if (g.format == "text") {
      std::cout << name << ": " << (pass ? "ok" : "MISMATCH") << " (states "
                << r.states << ", clusters " << r.clusters
                << ", default-mode arc gaps "
                << r.default_diff.missing_arcs.size()
                << ", exhaustive-mode differences "
                << r.exhaustive_diff.missing_arcs.size() +
                       r.exhaustive_diff.extra_arcs.size() +
                       r.exhaustive_diff.missing_nodes.size() +
                       r.exhaustive_diff.extra_nodes.size()
                << ")\n";
    }
  };
  if (!a.model.empty()) {
    const auto ctx = ModelContext::load(a.model, threads);
    if (a.initial.empty()) throw UsageError("verify --model needs --initial");
    run(ctx.ts, parse_states(a.initial, ctx.ts.species), a.model);
  } else if (a.random == 0) {
    throw UsageError("verify needs --model or --random");
  }
  std::mt19937_64 rng(g.seed);
  for (std::size_t k = 0; k < a.random; ++k) {
    const auto sys = cn::random_system(rng);
    run(sys.transitions, sys.initial, "random#" + std::to_string(k));
  }
  if (g.format == "json") {
    std::cout << io::dump(Json{{"pass", ok}, {"checks", std::move(report)}});
  } else {
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitNo;
}

// --- errors ------------------------------------------------------------------

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  if (dynamic_cast<const cn::UnknownSpecies*>(&e)) return "UnknownSpecies";
  if (dynamic_cast<const cn::SyntaxError*>(&e)) return "SyntaxError";
  if (dynamic_cast<const cn::NodeCapExceeded*>(&e)) return "NodeCapExceeded";
  if (dynamic_cast<const cn::ArcCapExceeded*>(&e)) return "ArcCapExceeded";
  if (dynamic_cast<const cn::CapExceeded*>(&e)) return "CapExceeded";
  if (dynamic_cast<const cn::DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const cn::NoPositiveGrading*>(&e)) return "NoPositiveGrading";
  if (dynamic_cast<const cn::ArithmeticOverflow*>(&e)) return "ArithmeticOverflow";
  if (dynamic_cast<const cn::InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const cn::ContractViolation*>(&e)) return "ContractViolation";
  if (dynamic_cast<const Json::exception*>(&e)) return "JsonError";
  if (dynamic_cast<const cn::Error*>(&e)) return "Error";
  return "InternalError";
}

int report_error(const std::exception& e) {
  Json j{{"error", error_kind(e)}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const cn::ParseError*>(&e)) {
    j["offset"] = p->offset();
  }
  std::cerr << j.dump() << "\n";
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clusternet: cluster graphs of chemical reaction networks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads,
                 "Worker threads (default: CLUSTERNET_THREADS or all cores)");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  app.add_option("--isa", g.isa, "Force a kernel set")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  int status = kExitOk;
  auto wrap = [&](auto fn) {
    return [&, fn] {
      if (g.isa == "scalar") cn::kernels::select(cn::kernels::Isa::Scalar);
      if (g.isa == "avx2") cn::kernels::select(cn::kernels::Isa::Avx2);
      status = fn();
    };
  };

  auto* reactions = app.add_subcommand("reactions", "Elementary reactions");
  reactions->require_subcommand(1);
  ReactionsGenArgs rg;
  auto* gen = reactions->add_subcommand("gen", "Enumerate and write a model");
  gen->add_option("--matrix", rg.matrix, "Balance matrix (text or JSON)")
      ->required();
  gen->add_option("--max-reactants", rg.max_reactants, "Reactant units")
      ->check(CLI::Range(1, 8));
  gen->add_option("-o,--output", rg.output, "Model file to write");
  gen->callback(wrap([&] { return reactions_gen(g, rg); }));

  auto* grading = app.add_subcommand("grading", "Positive gradings");
  grading->require_subcommand(1);
  GradingArgs ga;
  auto* gcheck = grading->add_subcommand("check", "Check a model's grading");
  gcheck->add_option("--model", ga.model)->required();
  gcheck->callback(wrap([&] { return grading_check(g, ga); }));
  auto* gfind = grading->add_subcommand("find", "Derive a positive grading");
  gfind->add_option("--model", ga.model);
  gfind->add_option("--matrix", ga.matrix);
  gfind->callback(wrap([&] { return grading_find(g, ga); }));

  auto* cluster = app.add_subcommand("cluster", "Cluster membership");
  cluster->require_subcommand(1);
  ClusterArgs ca;
  auto* eq = cluster->add_subcommand("eq", "Exit 0 iff two states share a cluster");
  eq->add_option("--model", ca.model)->required();
  eq->add_option("--state", ca.states)->required();
  eq->callback(wrap([&] { return cluster_eq(g, ca); }));
  auto* repr = cluster->add_subcommand("repr", "Canonical representative");
  repr->add_option("--model", ca.model)->required();
  repr->add_option("--state", ca.states)->required();
  repr->callback(wrap([&] { return cluster_repr(g, ca); }));

  auto* graph = app.add_subcommand("graph", "Cluster graphs");
  graph->require_subcommand(1);
  GraphBuildArgs gb;
  auto* build = graph->add_subcommand("build", "Reconstruct the cluster graph");
  build->add_option("--model", gb.model)->required();
  build->add_option("--initial", gb.initial)->required();
  build->add_flag("--exhaustive", gb.exhaustive,
                  "Test every cluster member against every move");
  build->add_option("--node-cap", gb.node_cap);
  build->add_option("-o,--output", gb.output, "Graph file to write");
  build->add_option("--dot", gb.dot, "Also write DOT here");
  build->callback(wrap([&] { return graph_build(g, gb); }));

  QueryArgs qa;
  auto add_query = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", qa.graph)->required();
    sub->add_option("--from", qa.from)->required();
    sub->add_option("--to", qa.to)->required();
    return sub;
  };
  add_query("connect", "Exit 0 iff the target cluster is reachable")
      ->callback(wrap([&] { return connect(g, qa); }));
  auto* paths_cmd = add_query("paths", "Enumerate simple cluster-graph paths");
  paths_cmd->add_option("--max-paths", qa.max_paths);
  paths_cmd->callback(wrap([&] { return paths(g, qa); }));
  add_query("essential", "Arcs on every path")
      ->callback(wrap([&] { return essential(g, qa); }));

  BoundArgs ba;
  auto* bound_cmd = app.add_subcommand("bound", "Upper bound on clusters of a degree");
  bound_cmd->add_option("--model", ba.model)->required();
  bound_cmd->add_option("--state", ba.state)->required();
  bound_cmd->add_option("--cap", ba.cap, "Largest fiber to scan");
  bound_cmd->callback(wrap([&] { return bound(g, ba); }));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against brute force");
  verify_cmd->add_option("--model", va.model);
  verify_cmd->add_option("--initial", va.initial);
  verify_cmd->add_option("--state-cap", va.state_cap);
  verify_cmd->add_flag("--exhaustive", va.exhaustive,
                       "Judge the exhaustive-mode graph instead of the default");
  verify_cmd->add_option("--random", va.random,
                         "Also check this many random systems (see --seed)");
  verify_cmd->callback(wrap([&] { return verify(g, va); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "UsageError"}, {"message", e.what()}}.dump()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    return report_error(e);
  }
  return status;
}
