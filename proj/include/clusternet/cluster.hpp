#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "clusternet/basis_cache.hpp"
#include "clusternet/exponent.hpp"
#include "clusternet/reactions.hpp"

namespace clusternet {

struct ClusterArc {
  std::size_t source = 0;
  std::size_t target = 0;
  /// The irreversible move realizing the arc.
  Move label;
  /// A state z in the source cluster with z + label in the target cluster.
  Exponent witness;

  friend bool operator==(const ClusterArc&, const ClusterArc&) = default;
};

/// Directed multigraph on cluster representatives (normal forms under the
/// base basis of J_U), one arc per distinct realizing move.
class ClusterGraph {
 public:
  /// Returns (index, inserted).
  std::pair<std::size_t, bool> add_node(const Exponent& rep);
  void add_arc(ClusterArc arc);
  void mark_initial(std::size_t node);

  const std::vector<Exponent>& nodes() const noexcept { return nodes_; }
  const std::vector<ClusterArc>& arcs() const noexcept { return arcs_; }
  const std::vector<std::size_t>& initial() const noexcept { return initial_; }
  std::optional<std::size_t> find(const Exponent& rep) const;
  /// Indices of arcs leaving `node`, in insertion order.
  const std::vector<std::size_t>& out_arcs(std::size_t node) const {
    return out_[node];
  }

  friend bool operator==(const ClusterGraph& a, const ClusterGraph& b) {
    return a.nodes_ == b.nodes_ && a.arcs_ == b.arcs_ &&
           a.initial_ == b.initial_;
  }

 private:
  std::vector<Exponent> nodes_;
  std::vector<ClusterArc> arcs_;
  std::vector<std::size_t> initial_;
  std::vector<std::vector<std::size_t>> out_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

/// An arc by value: (source rep, target rep, label).
using ArcKey = std::tuple<Exponent, Exponent, Move>;

struct GraphDiff {
  std::vector<Exponent> missing_nodes;
  std::vector<Exponent> extra_nodes;
  std::vector<ArcKey> missing_arcs;
  std::vector<ArcKey> extra_arcs;

  bool empty() const noexcept {
    return missing_nodes.empty() && extra_nodes.empty() &&
           missing_arcs.empty() && extra_arcs.empty();
  }
};

/// Order-insensitive comparison by node representatives and labeled arcs
/// (witnesses ignored). "missing" = in expected, not in actual.
GraphDiff compare_graphs(const ClusterGraph& expected,
                         const ClusterGraph& actual);

/// Convenience: the cache CGR needs for ts (base basis + every key that the
/// connectivity tests of ts.irreversible visit).
BasisCache build_cache(const TransitionSet& ts, std::size_t threads = 1);

/// Coordinate increment. With dbar = d - d_j e_j, returns some z in
/// cluster(y) with z >= d, or nullopt if none exists. Requires y >= dbar
/// and d_j > 0; throws ContractViolation otherwise.
std::optional<Exponent> ci(const BasisCache& cache, const Exponent& y,
                           const Exponent& d, std::size_t j);

/// Cluster connectivity test: some z in cluster(y) with z + d >= 0, or
/// nullopt. Walks the negative support of d in ascending order.
std::optional<Exponent> cct(const BasisCache& cache, const Exponent& y,
                            const Move& d);

struct CgrOptions {
  /// Test every cluster member against every move instead of one
  /// connectivity-test witness per (cluster, move).
  bool exhaustive = false;
  std::size_t node_cap = 100'000;
  std::size_t arc_cap = 1'000'000;
  /// Largest fiber enumerated per cluster in exhaustive mode.
  std::size_t member_cap = 1'000'000;
  std::size_t threads = 1;
  /// Re-check every witness (z ~ u and z + d >= 0) and throw
  /// ContractViolation on failure.
  bool verify_witnesses = false;
};

/// Cluster graph reachable from the clusters of `initial`, built by a FIFO
/// worklist over representatives and the moves of ts.irreversible in order.
ClusterGraph cgr(const TransitionSet& ts, std::span<const Exponent> initial,
                 const BasisCache& cache, const CgrOptions& options = {});

/// All members of the cluster of `rep`, found by walking the reversible
/// moves, in descending lexicographic order.
std::vector<Exponent> cluster_members(const BasisCache& cache,
                                      const Exponent& rep, std::size_t cap);

}  // namespace clusternet
