#include "clusternet/reactions.hpp"

#include <algorithm>
#include <set>

#include "clusternet/error.hpp"
#include "clusternet/parallel.hpp"

namespace clusternet {

void BalanceMatrix::validate() const {
  if (!row_labels.empty() && row_labels.size() != rows.size()) {
    throw InvalidArgument("balance matrix has " +
                          std::to_string(rows.size()) + " rows but " +
                          std::to_string(row_labels.size()) + " labels");
  }
  for (const auto& row : rows) {
    if (row.size() != species.size()) {
      throw InvalidArgument("balance matrix row length " +
                            std::to_string(row.size()) + " != species count " +
                            std::to_string(species.size()));
    }
  }
}

std::vector<Move> TransitionSet::all_moves() const {
  std::vector<Move> all;
  for (const Move& u : reversible) {
    all.push_back(u);
    all.push_back(u.negated());
  }
  all.insert(all.end(), irreversible.begin(), irreversible.end());
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

std::vector<Exponent> reactant_multisets(std::size_t n, std::size_t max_size) {
  std::vector<Exponent> out;
  // Multisets of size k as nondecreasing index tuples.
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      Exponent r(n);
      for (std::size_t i : idx) r.set(i, r[i] + 1);
      out.push_back(std::move(r));
      std::size_t p = k;
      while (p > 0 && idx[p - 1] == n - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t q = p; q < k; ++q) idx[q] = idx[p - 1];
    }
  }
  return out;
}

}  // namespace

ElementaryReactions enumerate_elementary(const BalanceMatrix& A,
                                         const Grading& grading,
                                         std::size_t max_reactants,
                                         std::size_t fiber_cap,
                                         std::size_t threads) {
  A.validate();
  const std::size_t n = A.species_count();
  require_same_size(n, grading.dimension());
  // Solve in a single fiber of the stacked grading [g; A].
  IntMatrix stacked;
  stacked.emplace_back(grading.primary().begin(), grading.primary().end());
  stacked.insert(stacked.end(), A.rows.begin(), A.rows.end());
  const Grading system_grading(stacked);

  ElementaryReactions result;
  const auto reactants = reactant_multisets(n, max_reactants);
  result.systems.resize(reactants.size());
  parallel_for(reactants.size(), threads, [&](std::size_t s) {
    const Exponent& r = reactants[s];
    ElementarySystem& sys = result.systems[s];
    sys.reactants = r;
    for (const Exponent& y :
         fiber_enumerate(system_grading, system_grading.degree(r), fiber_cap)) {
      if (y != r) sys.solutions.push_back(difference(y, r));
    }
  });

  std::set<Move> distinct;
  for (const auto& sys : result.systems) {
    result.instance_count += sys.solutions.size();
    distinct.insert(sys.solutions.begin(), sys.solutions.end());
  }
  result.distinct.assign(distinct.begin(), distinct.end());
  return result;
}

namespace {

bool canonical_sign(const Move& d) {
  for (Coord c : d) {
    if (c != 0) return c > 0;
  }
  return false;
}

}  // namespace

TransitionSet partition_transitions(const std::vector<Move>& reactions,
                                    std::vector<std::string> species,
                                    Grading grading) {
  TransitionSet ts;
  ts.species = std::move(species);
  ts.grading = std::move(grading);
  const std::size_t n = ts.grading.dimension();
  if (!ts.species.empty()) require_same_size(n, ts.species.size());

  std::set<Move> present;
  for (const Move& d : reactions) {
    require_same_size(n, d.size());
    if (d.is_zero()) {
      throw InvalidArgument("transition list contains the zero vector");
    }
    if (!ts.grading.is_homogeneous(d)) {
      throw InvalidArgument("transition " + to_string(d) +
                            " is not homogeneous under the grading");
    }
    present.insert(d);
  }
  std::set<Move> seen;
  for (const Move& d : reactions) {
    if (!seen.insert(d).second) continue;
    if (present.count(d.negated())) {
      if (canonical_sign(d)) ts.reversible.push_back(d);
    } else {
      ts.irreversible.push_back(d);
    }
  }
  return ts;
}

Move encode_overall(const Exponent& initial, const Exponent& final_state) {
  return difference(final_state, initial);
}

}  // namespace clusternet
