#pragma once

// Brute-force reference: explicit state-graph search. Slow by design and
// independent of the Gröbner machinery, so it can be used as ground truth.

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "clusternet/binomial.hpp"
#include "clusternet/cluster.hpp"
#include "clusternet/reactions.hpp"
#include "clusternet/term_order.hpp"

namespace clusternet::oracle {

enum class MoveKind { Forward, Backward, Irreversible };

struct StateArc {
  std::size_t from;
  std::size_t to;
  MoveKind kind;
  /// Index into the reversible (Forward/Backward) or irreversible list.
  std::size_t move;
};

struct StateGraph {
  std::vector<Exponent> states;
  std::vector<StateArc> arcs;
  std::vector<std::size_t> origin;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index;

  std::optional<std::size_t> find(const Exponent& x) const {
    auto it = index.find(x);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

/// Breadth-first closure of `initial` under U, -U and D. Throws
/// CapExceeded when more than `cap` states are discovered.
StateGraph explore(const TransitionSet& ts, std::span<const Exponent> initial,
                   std::size_t cap);

/// Connected components under the reversible arcs, as state indices. Each
/// component is sorted; components are ordered by their smallest index.
std::vector<std::vector<std::size_t>> clusters(const StateGraph& graph);

/// Definitional cluster graph: every D-arc between explored states whose
/// endpoints lie in different clusters. Each cluster is keyed by its
/// ≺-minimal member under `order`, found by scanning the cluster.
ClusterGraph cluster_graph(const StateGraph& graph, const TransitionSet& ts,
                           const TermOrder& order);

/// States reachable from `start` by binomial moves (x >= head: x - head +
/// tail; x >= tail: x - tail + head). Throws CapExceeded beyond `cap`.
std::vector<Exponent> binomial_component(std::span<const Binomial> moves,
                                         const Exponent& start,
                                         std::size_t cap);

/// Components of `states` (assumed closed under the moves) by binomial
/// moves; returns a component id per state.
std::vector<std::size_t> binomial_components(
    std::span<const Binomial> moves, std::span<const Exponent> states);

/// Result of checking the Gröbner-based machinery against the state graph.
struct CrossCheck {
  std::size_t states = 0;
  std::size_t clusters = 0;
  /// Clusters whose members do not share one normal form.
  std::size_t split_clusters = 0;
  /// Pairs of distinct clusters with equal normal forms.
  std::size_t merged_clusters = 0;
  /// Clusters whose normal form is not their ≺-minimal member.
  std::size_t wrong_representatives = 0;
  GraphDiff default_diff;
  GraphDiff exhaustive_diff;

  bool clusters_agree() const noexcept {
    return split_clusters == 0 && merged_clusters == 0 &&
           wrong_representatives == 0;
  }
};

/// Explores the state graph from `initial` (up to `state_cap` states) and
/// compares its clusters and cluster graph with normal forms and with cgr in
/// both modes.
CrossCheck cross_check(const TransitionSet& ts,
                       std::span<const Exponent> initial,
                       const BasisCache& cache, std::size_t state_cap,
                       std::size_t threads = 1);

}  // namespace clusternet::oracle
