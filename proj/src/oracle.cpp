#include "clusternet/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "clusternet/error.hpp"

namespace clusternet::oracle {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

StateGraph explore(const TransitionSet& ts, std::span<const Exponent> initial,
                   std::size_t cap) {
  StateGraph g;
  std::deque<std::size_t> queue;
  auto visit = [&](const Exponent& x) -> std::size_t {
    auto [it, inserted] = g.index.emplace(x, g.states.size());
    if (inserted) {
      if (g.states.size() >= cap) throw CapExceeded("state graph", cap);
      g.states.push_back(x);
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (const Exponent& s : initial) {
    require_same_size(ts.dimension(), s.size());
    const std::size_t i = visit(s);
    if (std::find(g.origin.begin(), g.origin.end(), i) == g.origin.end()) {
      g.origin.push_back(i);
    }
  }
  std::vector<Move> backward;
  for (const Move& u : ts.reversible) backward.push_back(u.negated());
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    const Exponent x = g.states[a];
    auto step = [&](const Move& m, MoveKind kind, std::size_t k) {
      if (auto y = apply_move(x, m)) {
        const std::size_t b = visit(*y);
        g.arcs.push_back(StateArc{a, b, kind, k});
      }
    };
    for (std::size_t k = 0; k < ts.reversible.size(); ++k) {
      step(ts.reversible[k], MoveKind::Forward, k);
      step(backward[k], MoveKind::Backward, k);
    }
    for (std::size_t k = 0; k < ts.irreversible.size(); ++k) {
      step(ts.irreversible[k], MoveKind::Irreversible, k);
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> clusters(const StateGraph& graph) {
  UnionFind uf(graph.states.size());
  for (const StateArc& arc : graph.arcs) {
    if (arc.kind != MoveKind::Irreversible) uf.unite(arc.from, arc.to);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    groups[uf.find(i)].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

ClusterGraph cluster_graph(const StateGraph& graph, const TransitionSet& ts,
                           const TermOrder& order) {
  const auto parts = clusters(graph);
  std::vector<std::size_t> part_of(graph.states.size());
  std::vector<Exponent> rep(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::size_t best = parts[p].front();
    for (std::size_t i : parts[p]) {
      part_of[i] = p;
      if (order.less(graph.states[i], graph.states[best])) best = i;
    }
    rep[p] = graph.states[best];
  }

  ClusterGraph out;
  // Nodes in order of their smallest state index, so BFS discovery order.
  std::vector<std::size_t> node_of(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    node_of[p] = out.add_node(rep[p]).first;
  }
  for (std::size_t o : graph.origin) out.mark_initial(node_of[part_of[o]]);

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const StateArc& arc : graph.arcs) {
    if (arc.kind != MoveKind::Irreversible) continue;
    const std::size_t pu = part_of[arc.from], pw = part_of[arc.to];
    if (pu == pw) continue;
    if (!seen.emplace(pu, pw, arc.move).second) continue;
    out.add_arc(ClusterArc{node_of[pu], node_of[pw],
                           ts.irreversible[arc.move],
                           graph.states[arc.from]});
  }
  return out;
}

std::vector<Exponent> binomial_component(std::span<const Binomial> moves,
                                         const Exponent& start,
                                         std::size_t cap) {
  std::vector<Exponent> out{start};
  std::set<Exponent> seen{start};
  for (std::size_t q = 0; q < out.size(); ++q) {
    const Exponent x = out[q];
    for (const Binomial& b : moves) {
      for (int side = 0; side < 2; ++side) {
        const Exponent& from = side == 0 ? b.head : b.tail;
        const Exponent& to = side == 0 ? b.tail : b.head;
        if (!divides(from, x)) continue;
        Exponent y = add(subtract(x, from), to);
        if (seen.insert(y).second) {
          if (out.size() >= cap) throw CapExceeded("binomial component", cap);
          out.push_back(std::move(y));
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> binomial_components(
    std::span<const Binomial> moves, std::span<const Exponent> states) {
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], i);
  UnionFind uf(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const Binomial& b : moves) {
      if (!divides(b.head, states[i])) continue;
      const Exponent y = add(subtract(states[i], b.head), b.tail);
      auto it = index.find(y);
      if (it == index.end()) {
        throw InvalidArgument("binomial_components: state set not closed");
      }
      uf.unite(i, it->second);
    }
  }
  std::vector<std::size_t> comp(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) comp[i] = uf.find(i);
  return comp;
}

CrossCheck cross_check(const TransitionSet& ts,
                       std::span<const Exponent> initial,
                       const BasisCache& cache, std::size_t state_cap,
                       std::size_t threads) {
  CrossCheck out;
  const StateGraph graph = explore(ts, initial, state_cap);
  const auto parts = clusters(graph);
  out.states = graph.states.size();
  out.clusters = parts.size();
  const GroebnerBasis& base = cache.base();
  std::map<Exponent, std::size_t> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Exponent nf = normal_form(graph.states[parts[p].front()], base);
    Exponent least = graph.states[parts[p].front()];
    bool split = false;
    for (std::size_t i : parts[p]) {
      const Exponent& x = graph.states[i];
      if (normal_form(x, base) != nf) split = true;
      if (base.order().less(x, least)) least = x;
    }
    if (split) ++out.split_clusters;
    if (nf != least) ++out.wrong_representatives;
    if (!owner.emplace(nf, p).second) ++out.merged_clusters;
  }
  const ClusterGraph expected = cluster_graph(graph, ts, base.order());
  CgrOptions options;
  options.threads = threads;
  options.verify_witnesses = true;
  out.default_diff = compare_graphs(expected, cgr(ts, initial, cache, options));
  options.exhaustive = true;
  out.exhaustive_diff =
      compare_graphs(expected, cgr(ts, initial, cache, options));
  return out;
}

}  // namespace clusternet::oracle
