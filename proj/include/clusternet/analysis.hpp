#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clusternet/cluster.hpp"
#include "clusternet/grading.hpp"
#include "clusternet/groebner.hpp"

namespace clusternet {

/// A path is a sequence of arc indices into ClusterGraph::arcs().
using ArcPath = std::vector<std::size_t>;

struct PathQueryResult {
  bool connected = false;
  std::optional<ArcPath> shortest_path;
  std::vector<ArcPath> paths;
  /// Set when enumeration stopped at the path cap.
  bool truncated = false;
};

/// Nonnegative weight per arc (e.g. a reaction energy). Unit weights when
/// empty.
using ArcWeight = std::function<double(const ClusterArc&)>;

/// Question 1: is cluster(t) reachable from cluster(s)? Maps both states to
/// representatives with `basis`; throws InvalidArgument if s's cluster is
/// not a node of the graph. The shortest path minimizes hop count, or total
/// weight when `weight` is given.
PathQueryResult connected(const ClusterGraph& graph, const Exponent& s,
                          const Exponent& t, const GroebnerBasis& basis,
                          const ArcWeight& weight = {});

/// Question 2: every simple labeled path from cluster(s) to cluster(t),
/// depth first, children ordered by (target representative, label). Arcs
/// with different labels give different paths. s ~ t yields one empty path.
PathQueryResult enumerate_paths(const ClusterGraph& graph, const Exponent& s,
                                const Exponent& t, std::size_t max_paths,
                                const GroebnerBasis& basis);

struct EssentialArc {
  std::size_t arc;
  /// True when this is the only label between its two clusters.
  bool unique_label;

  friend bool operator==(const EssentialArc&, const EssentialArc&) = default;
};

/// Arcs whose removal disconnects cluster(t) from cluster(s), in arc order.
/// Throws InvalidArgument if t is not reachable from s.
std::vector<EssentialArc> essential_arcs(const ClusterGraph& graph,
                                         const Exponent& s, const Exponent& t,
                                         const GroebnerBasis& basis);

/// Number of standard monomials (divisible by no head of `basis`) of degree
/// deg(s): the Hilbert-Poincaré coefficient at deg(s), an upper bound on
/// the number of clusters of that degree. Counted recursively on the
/// leading-term ideal; throws CapExceeded when more than `cap`
/// intermediate counts would be memoized.
std::uint64_t cluster_count_bound(const GroebnerBasis& basis,
                                  const Grading& grading, const Exponent& s,
                                  std::size_t cap);

}  // namespace clusternet
