#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clusternet/cluster.hpp"
#include "clusternet/groebner.hpp"
#include "clusternet/reactions.hpp"

namespace clusternet::io {

using Json = nlohmann::json;
using SpeciesList = std::span<const std::string>;

/// Names must be nonempty, unique, whitespace-free and not "+".
void validate_species(SpeciesList species);

/// Parses "2 MnO4- + 6 H+ + 5 H2C2O4". Terms are separated by a standalone
/// '+' token; a term is an optional nonnegative integer coefficient followed
/// by a declared species name. Names may contain '+'. Coefficients of
/// repeated species add up.
Exponent parse_state(std::string_view expr, SpeciesList species);

/// "2 A + B"; the zero state renders as "0".
std::string format_state(const Exponent& x, SpeciesList species);
/// "A + B → 2 C" (reactants on the left).
std::string format_reaction(const Move& d, SpeciesList species);

// --- Balance matrices --------------------------------------------------------

/// JSON object {"species", "row_labels", "rows"}, or whitespace-separated
/// text: a header line of species names followed by one integer row per
/// line, each optionally prefixed by a non-numeric row label. Lines starting
/// with '#' are ignored.
BalanceMatrix read_balance_matrix(const std::filesystem::path& path);
BalanceMatrix parse_balance_matrix_text(std::istream& in);
Json to_json(const BalanceMatrix& m);
BalanceMatrix balance_matrix_from_json(const Json& j);

// --- Model files -------------------------------------------------------------

struct ModelFile {
  std::vector<std::string> species;
  std::optional<BalanceMatrix> balance_matrix;
  std::optional<std::vector<Move>> reversible;
  std::optional<std::vector<Move>> irreversible;
  std::optional<Grading> grading;
  std::map<std::string, std::size_t> caps;

  /// Throws InvalidArgument when lengths or names are inconsistent.
  void validate() const;
  std::size_t cap(const std::string& name, std::size_t fallback) const;

  /// The grading given in the file, else find_positive_grading on the
  /// balance matrix.
  Grading resolve_grading() const;
  /// Explicit transitions when present; otherwise enumerates elementary
  /// reactions (up to `max_reactants` reactant units) from the balance
  /// matrix and partitions them.
  TransitionSet transitions(std::size_t max_reactants = 2,
                            std::size_t threads = 1) const;

  friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

Json to_json(const ModelFile& model);
ModelFile model_from_json(const Json& j);
ModelFile read_model(const std::filesystem::path& path);
void write_model(const std::filesystem::path& path, const ModelFile& model);

// --- Cluster graph files -----------------------------------------------------

/// A cluster graph with everything needed to answer queries offline.
struct GraphDocument {
  std::vector<std::string> species;
  Grading grading;
  TermOrder order = TermOrder::degrevlex(0);
  std::vector<Binomial> basis;
  std::vector<Exponent> initial_states;
  std::string mode = "default";
  ClusterGraph graph;

  GroebnerBasis groebner_basis() const { return GroebnerBasis(order, basis); }

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

Json to_json(const GraphDocument& doc);
GraphDocument graph_from_json(const Json& j);
GraphDocument read_graph(const std::filesystem::path& path);
void write_graph(const std::filesystem::path& path, const GraphDocument& doc);

/// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

/// Graphviz digraph: one node per cluster labeled with its representative,
/// one edge per arc labeled with its reaction. Initial clusters get a
/// double border; arcs listed in `highlight` are drawn bold.
std::string to_dot(const GraphDocument& doc,
                   std::span<const std::size_t> highlight = {});

/// One line per arc: source,target,reaction,label.
std::string arcs_to_csv(const GraphDocument& doc);

}  // namespace clusternet::io
