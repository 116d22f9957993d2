#include "clusternet/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <queue>

#include "clusternet/error.hpp"

namespace clusternet {

namespace {

struct Endpoints {
  std::size_t source;
  std::optional<std::size_t> target;
};

Endpoints locate(const ClusterGraph& graph, const Exponent& s,
                 const Exponent& t, const GroebnerBasis& basis) {
  const auto source = graph.find(normal_form(s, basis));
  if (!source) {
    throw InvalidArgument("the cluster of " + to_string(s) +
                          " is not a node of this graph");
  }
  return {*source, graph.find(normal_form(t, basis))};
}

/// Reachability from `from` to `to` skipping arc `skip`.
bool reachable(const ClusterGraph& graph, std::size_t from, std::size_t to,
               std::optional<std::size_t> skip) {
  if (from == to) return true;
  std::vector<bool> seen(graph.nodes().size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t a : graph.out_arcs(u)) {
      if (skip && a == *skip) continue;
      const std::size_t w = graph.arcs()[a].target;
      if (w == to) return true;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return false;
}

ArcPath unwind(const ClusterGraph& graph,
               const std::vector<std::optional<std::size_t>>& via,
               std::size_t from, std::size_t to) {
  ArcPath path;
  for (std::size_t v = to; v != from;) {
    const std::size_t a = *via[v];
    path.push_back(a);
    v = graph.arcs()[a].source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<ArcPath> bfs_path(const ClusterGraph& graph, std::size_t from,
                                std::size_t to) {
  std::vector<std::optional<std::size_t>> via(graph.nodes().size());
  std::vector<bool> seen(graph.nodes().size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == to) return unwind(graph, via, from, to);
    for (std::size_t a : graph.out_arcs(u)) {
      const std::size_t w = graph.arcs()[a].target;
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = a;
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::optional<ArcPath> dijkstra_path(const ClusterGraph& graph,
                                     std::size_t from, std::size_t to,
                                     const ArcWeight& weight) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(graph.nodes().size(), inf);
  std::vector<std::optional<std::size_t>> via(graph.nodes().size());
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[from] = 0.0;
  heap.emplace(0.0, from);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    if (u == to) return unwind(graph, via, from, to);
    for (std::size_t a : graph.out_arcs(u)) {
      const double w = weight(graph.arcs()[a]);
      if (w < 0.0) throw InvalidArgument("arc weights must be nonnegative");
      const std::size_t v = graph.arcs()[a].target;
      if (du + w < dist[v]) {
        dist[v] = du + w;
        via[v] = a;
        heap.emplace(dist[v], v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PathQueryResult connected(const ClusterGraph& graph, const Exponent& s,
                          const Exponent& t, const GroebnerBasis& basis,
                          const ArcWeight& weight) {
  const Endpoints ends = locate(graph, s, t, basis);
  PathQueryResult result;
  if (!ends.target) return result;
  result.shortest_path =
      weight ? dijkstra_path(graph, ends.source, *ends.target, weight)
             : bfs_path(graph, ends.source, *ends.target);
  result.connected = result.shortest_path.has_value();
  return result;
}

PathQueryResult enumerate_paths(const ClusterGraph& graph, const Exponent& s,
                                const Exponent& t, std::size_t max_paths,
                                const GroebnerBasis& basis) {
  const Endpoints ends = locate(graph, s, t, basis);
  PathQueryResult result;
  if (!ends.target) return result;
  const std::size_t goal = *ends.target;

  // Children sorted by (target representative, label).
  std::vector<std::vector<std::size_t>> children(graph.nodes().size());
  for (std::size_t u = 0; u < graph.nodes().size(); ++u) {
    children[u] = graph.out_arcs(u);
    std::sort(children[u].begin(), children[u].end(),
              [&](std::size_t a, std::size_t b) {
                const auto& x = graph.arcs()[a];
                const auto& y = graph.arcs()[b];
                const auto& xt = graph.nodes()[x.target];
                const auto& yt = graph.nodes()[y.target];
                if (xt != yt) return xt < yt;
                return x.label < y.label;
              });
  }

  std::vector<bool> on_path(graph.nodes().size(), false);
  ArcPath path;
  bool stop = false;
  auto dfs = [&](auto&& self, std::size_t u) -> void {
    if (u == goal) {
      if (result.paths.size() >= max_paths) {
        result.truncated = true;
        stop = true;
        return;
      }
      result.paths.push_back(path);
      return;
    }
    on_path[u] = true;
    for (std::size_t a : children[u]) {
      if (stop) break;
      const std::size_t w = graph.arcs()[a].target;
      if (on_path[w]) continue;
      path.push_back(a);
      self(self, w);
      path.pop_back();
    }
    on_path[u] = false;
  };
  dfs(dfs, ends.source);

  result.connected = !result.paths.empty();
  if (result.connected) result.shortest_path = bfs_path(graph, ends.source, goal);
  return result;
}

std::vector<EssentialArc> essential_arcs(const ClusterGraph& graph,
                                         const Exponent& s, const Exponent& t,
                                         const GroebnerBasis& basis) {
  const Endpoints ends = locate(graph, s, t, basis);
  if (!ends.target || !reachable(graph, ends.source, *ends.target, {})) {
    throw InvalidArgument("essential_arcs: target cluster is not reachable");
  }
  std::vector<EssentialArc> out;
  for (std::size_t a = 0; a < graph.arcs().size(); ++a) {
    if (reachable(graph, ends.source, *ends.target, a)) continue;
    const auto& arc = graph.arcs()[a];
    std::size_t parallel = 0;
    for (std::size_t b : graph.out_arcs(arc.source)) {
      if (graph.arcs()[b].target == arc.target) ++parallel;
    }
    out.push_back(EssentialArc{a, parallel == 1});
  }
  return out;
}

namespace {

// Hilbert function of a monomial ideal: #standard monomials of degree delta.
// Uses #std(I + <m>, delta) = #std(I, delta) - #std(I : m, delta - deg m).
class HilbertCounter {
 public:
  HilbertCounter(const Grading& grading, std::size_t cap)
      : grading_(grading), cap_(cap) {}

  std::uint64_t standard(std::vector<Exponent> gens,
                         const std::vector<Coord>& delta) {
    if (delta.front() < 0) return 0;
    std::erase_if(gens, [&](const Exponent& m) {
      return !fits(m, delta);
    });
    for (const Exponent& m : gens) {
      if (m.is_zero()) return 0;
    }
    if (gens.empty()) return monomials(0, delta);
    std::sort(gens.begin(), gens.end());
    auto key = std::make_pair(gens, delta);
    if (auto it = standard_memo_.find(key); it != standard_memo_.end()) {
      return it->second;
    }
    const Exponent m = gens.back();
    gens.pop_back();
    std::vector<Exponent> colon;
    for (const Exponent& g : gens) colon.push_back(subtract(lcm(g, m), m));
    const std::uint64_t all = standard(gens, delta);
    const std::uint64_t above = standard(minimalize(std::move(colon)),
                                         shift(delta, m));
    remember(standard_memo_, std::move(key), all - above);
    return all - above;
  }

 private:
  bool fits(const Exponent& m, const std::vector<Coord>& delta) const {
    return checked_dot(grading_.primary(), m.span()) <= delta.front();
  }

  std::vector<Coord> shift(const std::vector<Coord>& delta,
                           const Exponent& m) const {
    std::vector<Coord> out = delta;
    const auto deg = grading_.degree(m);
    for (std::size_t r = 0; r < out.size(); ++r) out[r] -= deg[r];
    return out;
  }

  static std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end(), [](const Exponent& a,
                                           const Exponent& b) {
      return a.total() != b.total() ? a.total() < b.total() : a < b;
    });
    std::vector<Exponent> out;
    for (Exponent& g : gens) {
      const bool redundant = std::any_of(out.begin(), out.end(), [&](
          const Exponent& h) { return divides(h, g); });
      if (!redundant) out.push_back(std::move(g));
    }
    return out;
  }

  // Monomials in variables i..n-1 of degree delta.
  std::uint64_t monomials(std::size_t i, const std::vector<Coord>& delta) {
    const std::size_t n = grading_.dimension();
    if (i == n) {
      return std::all_of(delta.begin(), delta.end(),
                         [](Coord c) { return c == 0; })
                 ? 1
                 : 0;
    }
    auto key = std::make_pair(i, delta);
    if (auto it = monomial_memo_.find(key); it != monomial_memo_.end()) {
      return it->second;
    }
    std::uint64_t total = 0;
    std::vector<Coord> rest = delta;
    const auto& rows = grading_.rows();
    while (rest.front() >= 0) {
      const std::uint64_t part = monomials(i + 1, rest);
      if (__builtin_add_overflow(total, part, &total)) {
        throw ArithmeticOverflow("standard monomial count overflows");
      }
      for (std::size_t r = 0; r < rest.size(); ++r) rest[r] -= rows[r][i];
    }
    remember(monomial_memo_, std::move(key), total);
    return total;
  }

  template <class Key>
  void remember(std::map<Key, std::uint64_t>& memo, Key key,
                std::uint64_t value) {
    if (standard_memo_.size() + monomial_memo_.size() >= cap_) {
      throw CapExceeded("standard monomial count", cap_);
    }
    memo.emplace(std::move(key), value);
  }

  const Grading& grading_;
  std::size_t cap_;
  std::map<std::pair<std::vector<Exponent>, std::vector<Coord>>,
           std::uint64_t>
      standard_memo_;
  std::map<std::pair<std::size_t, std::vector<Coord>>, std::uint64_t>
      monomial_memo_;
};

}  // namespace

std::uint64_t cluster_count_bound(const GroebnerBasis& basis,
                                  const Grading& grading, const Exponent& s,
                                  std::size_t cap) {
  require_same_size(basis.dimension(), grading.dimension());
  require_same_size(grading.dimension(), s.size());
  std::vector<Exponent> heads;
  for (const Binomial& b : basis.elements()) heads.push_back(b.head);
  return HilbertCounter(grading, cap).standard(std::move(heads),
                                               grading.degree(s));
}

}  // namespace clusternet
