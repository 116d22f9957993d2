#include "clusternet/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "clusternet/error.hpp"
#include "clusternet/parallel.hpp"

namespace clusternet {

// ---------------------------------------------------------------------------
// ClusterGraph

std::pair<std::size_t, bool> ClusterGraph::add_node(const Exponent& rep) {
  auto [it, inserted] = index_.emplace(rep, nodes_.size());
  if (inserted) {
    nodes_.push_back(rep);
    out_.emplace_back();
  }
  return {it->second, inserted};
}

void ClusterGraph::add_arc(ClusterArc arc) {
  if (arc.source >= nodes_.size() || arc.target >= nodes_.size()) {
    throw InvalidArgument("arc endpoint out of range");
  }
  out_[arc.source].push_back(arcs_.size());
  arcs_.push_back(std::move(arc));
}

void ClusterGraph::mark_initial(std::size_t node) {
  if (node >= nodes_.size()) throw InvalidArgument("initial node out of range");
  if (std::find(initial_.begin(), initial_.end(), node) == initial_.end()) {
    initial_.push_back(node);
  }
}

std::optional<std::size_t> ClusterGraph::find(const Exponent& rep) const {
  auto it = index_.find(rep);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GraphDiff compare_graphs(const ClusterGraph& expected,
                         const ClusterGraph& actual) {
  auto node_set = [](const ClusterGraph& g) {
    return std::set<Exponent>(g.nodes().begin(), g.nodes().end());
  };
  auto arc_set = [](const ClusterGraph& g) {
    std::set<ArcKey> arcs;
    for (const auto& a : g.arcs()) {
      arcs.emplace(g.nodes()[a.source], g.nodes()[a.target], a.label);
    }
    return arcs;
  };
  GraphDiff diff;
  const auto en = node_set(expected), an = node_set(actual);
  std::set_difference(en.begin(), en.end(), an.begin(), an.end(),
                      std::back_inserter(diff.missing_nodes));
  std::set_difference(an.begin(), an.end(), en.begin(), en.end(),
                      std::back_inserter(diff.extra_nodes));
  const auto ea = arc_set(expected), aa = arc_set(actual);
  std::set_difference(ea.begin(), ea.end(), aa.begin(), aa.end(),
                      std::back_inserter(diff.missing_arcs));
  std::set_difference(aa.begin(), aa.end(), ea.begin(), ea.end(),
                      std::back_inserter(diff.extra_arcs));
  return diff;
}

BasisCache build_cache(const TransitionSet& ts, std::size_t threads) {
  const auto keys = required_keys(ts.irreversible);
  return BasisCache::build(ts.reversible, ts.grading, keys, threads);
}

// ---------------------------------------------------------------------------
// Coordinate increment and connectivity test

std::optional<Exponent> ci(const BasisCache& cache, const Exponent& y,
                           const Exponent& d, std::size_t j) {
  require_same_size(cache.grading().dimension(), y.size());
  require_same_size(y.size(), d.size());
  if (j >= d.size() || d[j] <= 0) {
    throw ContractViolation("ci: j must lie in the support of d");
  }
  Exponent dbar = d;
  dbar.set(j, 0);
  if (!divides(dbar, y)) {
    throw ContractViolation("ci: y = " + to_string(y) + " is not >= " +
                            to_string(dbar));
  }
  const auto basis = cache.get(BasisKey{dbar, j});
  const Exponent zbar = normal_form(subtract(y, dbar), *basis);
  if (zbar[j] < d[j]) return std::nullopt;
  return add(zbar, dbar);
}

std::optional<Exponent> cct(const BasisCache& cache, const Exponent& y,
                            const Move& d) {
  require_same_size(y.size(), d.size());
  Exponent z = y;
  Exponent demand(d.size());
  for (std::size_t s = 0; s < d.size(); ++s) {
    if (d[s] >= 0) continue;
    demand.set(s, -d[s]);
    auto next = ci(cache, z, demand, s);
    if (!next) return std::nullopt;
    z = std::move(*next);
  }
  return z;
}

std::vector<Exponent> cluster_members(const BasisCache& cache,
                                      const Exponent& rep, std::size_t cap) {
  std::vector<Exponent> members{rep};
  std::set<Exponent> seen{rep};
  for (std::size_t q = 0; q < members.size(); ++q) {
    for (const Binomial& b : cache.generators()) {
      for (const Move& u : {b.as_move(), b.as_move().negated()}) {
        auto next = apply_move(members[q], u);
        if (!next || !seen.insert(*next).second) continue;
        if (members.size() >= cap) throw CapExceeded("cluster members", cap);
        members.push_back(std::move(*next));
      }
    }
  }
  std::sort(members.begin(), members.end(), std::greater<>());
  return members;
}

// ---------------------------------------------------------------------------
// Cluster graph reconstruction

namespace {

struct Candidate {
  Exponent target;
  Exponent witness;
};

class Reconstruction {
 public:
  Reconstruction(const TransitionSet& ts, const BasisCache& cache,
                 const CgrOptions& options)
      : ts_(ts), cache_(cache), options_(options) {}

  ClusterGraph run(std::span<const Exponent> initial) {
    for (const Exponent& s : initial) {
      require_same_size(ts_.dimension(), s.size());
      const auto [idx, inserted] = discover(normal_form(s, cache_.base()));
      graph_.mark_initial(idx);
      (void)inserted;
    }
    while (!worklist_.empty()) {
      const std::size_t u = worklist_.front();
      worklist_.pop_front();
      expand(u);
    }
    return std::move(graph_);
  }

 private:
  std::pair<std::size_t, bool> discover(const Exponent& rep) {
    auto result = graph_.add_node(rep);
    if (result.second) {
      if (graph_.nodes().size() > options_.node_cap) {
        throw NodeCapExceeded(graph_.nodes().size());
      }
      worklist_.push_back(result.first);
    }
    return result;
  }

  void expand(std::size_t u) {
    const Exponent rep = graph_.nodes()[u];
    const auto& D = ts_.irreversible;
    // Per-move candidate lists, merged below in move order.
    std::vector<std::vector<Candidate>> found(D.size());
    if (options_.exhaustive) {
      const auto members = cluster_members(cache_, rep, options_.member_cap);
      parallel_for(D.size(), options_.threads, [&](std::size_t k) {
        std::set<Exponent> seen;
        for (const Exponent& z : members) {
          auto next = apply_move(z, D[k]);
          if (!next) continue;
          Exponent w = normal_form(*next, cache_.base());
          if (w == rep || !seen.insert(w).second) continue;
          found[k].push_back(Candidate{std::move(w), z});
        }
      });
    } else {
      parallel_for(D.size(), options_.threads, [&](std::size_t k) {
        auto v = cct(cache_, rep, D[k]);
        if (!v) return;
        auto next = apply_move(*v, D[k]);
        if (options_.verify_witnesses &&
            (!next || !is_connected(rep, *v, cache_.base()))) {
          throw ContractViolation("cct returned an invalid witness " +
                                  to_string(*v) + " for move " +
                                  to_string(D[k]));
        }
        if (!next) return;
        Exponent w = normal_form(*next, cache_.base());
        if (w == rep) return;
        found[k].push_back(Candidate{std::move(w), std::move(*v)});
      });
    }
    for (std::size_t k = 0; k < D.size(); ++k) {
      for (Candidate& c : found[k]) {
        const std::size_t w = discover(c.target).first;
        graph_.add_arc(ClusterArc{u, w, D[k], std::move(c.witness)});
        if (graph_.arcs().size() > options_.arc_cap) {
          throw ArcCapExceeded(graph_.arcs().size());
        }
      }
    }
  }

  const TransitionSet& ts_;
  const BasisCache& cache_;
  const CgrOptions& options_;
  ClusterGraph graph_;
  std::deque<std::size_t> worklist_;
};

}  // namespace

ClusterGraph cgr(const TransitionSet& ts, std::span<const Exponent> initial,
                 const BasisCache& cache, const CgrOptions& options) {
  require_same_size(ts.dimension(), cache.grading().dimension());
  return Reconstruction(ts, cache, options).run(initial);
}

}  // namespace clusternet
