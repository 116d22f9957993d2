#include "clusternet/groebner.hpp"

#include <algorithm>
#include <limits>

#include "clusternet/error.hpp"
#include "clusternet/kernels.hpp"

namespace clusternet {

// ---------------------------------------------------------------------------
// HeadIndex

void HeadIndex::push_back(const Exponent& head) {
  require_same_size(n_, head.size());
  heads_.insert(heads_.end(), head.begin(), head.end());
  masks_.push_back(kernels::support_mask(head.data(), n_));
}

void HeadIndex::disable(std::size_t r) {
  std::fill_n(heads_.begin() + static_cast<std::ptrdiff_t>(r * n_), n_,
              std::numeric_limits<Coord>::max());
  masks_[r] = ~std::uint64_t{0};
}

std::optional<std::size_t> HeadIndex::find_last_divisor(
    const Coord* m, std::uint64_t m_mask) const {
  const std::size_t count = masks_.size();
  const std::size_t r = kernels::active().find_last_divisor(
      heads_.data(), masks_.data(), count, n_, m, m_mask, n_);
  if (r == count) return std::nullopt;
  return r;
}

std::optional<std::size_t> HeadIndex::find_last_divisor(
    const Exponent& m) const {
  require_same_size(n_, m.size());
  return find_last_divisor(m.data(), kernels::support_mask(m.data(), n_));
}

namespace {

/// Rewrites m in place: while some indexed head divides it, replace the
/// head factor with the matching tail. Returns the number of steps.
std::size_t reduce_in_place(Exponent& m, const HeadIndex& index,
                            std::span<const Binomial> rows) {
  const auto& k = kernels::active();
  const std::size_t n = m.size();
  std::size_t steps = 0;
  std::uint64_t mask = kernels::support_mask(m.data(), n);
  while (auto r = index.find_last_divisor(m.data(), mask)) {
    const Binomial& b = rows[*r];
    k.sub(m.data(), b.head.data(), m.mutable_data(), n);
    if (k.add(m.data(), b.tail.data(), m.mutable_data(), n) ==
        kernels::AddStatus::Overflow) {
      throw ArithmeticOverflow("exponent overflow during reduction");
    }
    mask = kernels::support_mask(m.data(), n);
    ++steps;
  }
  return steps;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(TermOrder order, std::vector<Binomial> elements)
    : order_(std::move(order)),
      elements_(std::move(elements)),
      heads_(order_.size()) {
  for (const Binomial& b : elements_) {
    require_same_size(order_.size(), b.size());
    heads_.push_back(b.head);
  }
}

std::optional<std::size_t> GroebnerBasis::find_reducer(
    const Exponent& m) const {
  return heads_.find_last_divisor(m);
}

Exponent normal_form(const Exponent& m, const GroebnerBasis& basis,
                     std::size_t& steps) {
  require_same_size(basis.dimension(), m.size());
  Exponent out = m;
  // The basis is sorted by head, so the last divisor is the ≺-largest head.
  const auto& k = kernels::active();
  const std::size_t n = m.size();
  steps = 0;
  while (auto r = basis.find_reducer(out)) {
    const Binomial& b = basis.elements()[*r];
    k.sub(out.data(), b.head.data(), out.mutable_data(), n);
    if (k.add(out.data(), b.tail.data(), out.mutable_data(), n) ==
        kernels::AddStatus::Overflow) {
      throw ArithmeticOverflow("exponent overflow during normal form");
    }
    ++steps;
  }
  return out;
}

Exponent normal_form(const Exponent& m, const GroebnerBasis& basis) {
  std::size_t steps = 0;
  return normal_form(m, basis, steps);
}

bool is_connected(const Exponent& y, const Exponent& z,
                  const GroebnerBasis& basis) {
  require_same_size(y.size(), z.size());
  return normal_form(y, basis) == normal_form(z, basis);
}

std::optional<Binomial> spair(const Binomial& f, const Binomial& g,
                              const TermOrder& order) {
  require_same_size(f.size(), g.size());
  if (f == g) return std::nullopt;
  const Exponent gamma = lcm(f.head, g.head);
  Exponent a = add(subtract(gamma, f.head), f.tail);
  Exponent b = add(subtract(gamma, g.head), g.tail);
  return orient(std::move(a), std::move(b), order);
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
  Coord degree;
  std::size_t serial;
};

class PairQueue {
 public:
  PairQueue(const TermOrder& order, PairSelection selection)
      : order_(order), selection_(selection) {}

  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }

  CriticalPair pop() {
    CriticalPair p = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  template <class Pred>
  void erase_if(Pred pred) {
    std::erase_if(pairs_, pred);
  }

  std::span<const CriticalPair> pairs() const noexcept { return pairs_; }

  /// Inserts a batch, keeping the queue sorted so that pop() returns the
  /// next pair under the selection strategy.
  void insert(std::vector<CriticalPair> batch) {
    auto later_first = [this](const CriticalPair& a, const CriticalPair& b) {
      return before(b, a);
    };
    std::sort(batch.begin(), batch.end(), later_first);
    std::vector<CriticalPair> merged;
    merged.reserve(pairs_.size() + batch.size());
    std::merge(std::make_move_iterator(pairs_.begin()),
               std::make_move_iterator(pairs_.end()),
               std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()),
               std::back_inserter(merged), later_first);
    pairs_ = std::move(merged);
  }

 private:
  bool before(const CriticalPair& a, const CriticalPair& b) const {
    if (selection_ == PairSelection::Fifo) return a.serial < b.serial;
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto& perm = order_.tiebreak_perm();
    for (std::size_t k = perm.size(); k-- > 0;) {
      const std::size_t v = perm[k];
      if (a.lcm[v] != b.lcm[v]) return a.lcm[v] > b.lcm[v];
    }
    return a.serial < b.serial;
  }

  const TermOrder& order_;
  PairSelection selection_;
  std::vector<CriticalPair> pairs_;
};

class BuchbergerRun {
 public:
  BuchbergerRun(const TermOrder& order, const BuchbergerOptions& options)
      : order_(order),
        options_(options),
        index_(order.size()),
        queue_(order, options.selection) {}

  void add_generator(const Binomial& g) {
    auto oriented = orient(g.head, g.tail, order_);
    if (!oriented) return;
    for (std::size_t i = 0; i < work_.size(); ++i) {
      if (work_[i] == *oriented) return;
    }
    insert(std::move(*oriented));
  }

  void run() {
    while (!queue_.empty()) {
      CriticalPair p = queue_.pop();
      ++stats_.pairs_reduced;
      auto s = spair(work_[p.i], work_[p.j], order_);
      if (!s) {
        ++stats_.zero_reductions;
        continue;
      }
      reduce_in_place(s->head, index_, work_);
      reduce_in_place(s->tail, index_, work_);
      auto h = orient(std::move(s->head), std::move(s->tail), order_);
      if (!h) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(*h));
    }
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < work_.size(); ++i) {
      if (active_[i]) live.push_back(i);
    }
    // Minimalize: drop elements whose head another live head divides.
    std::vector<std::size_t> minimal;
    for (std::size_t a : live) {
      bool redundant = false;
      for (std::size_t b : live) {
        if (a == b || !divides(work_[b].head, work_[a].head)) continue;
        if (work_[b].head != work_[a].head || b < a) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    std::vector<Binomial> rows;
    HeadIndex minimal_index(order_.size());
    for (std::size_t a : minimal) {
      rows.push_back(work_[a]);
      minimal_index.push_back(work_[a].head);
    }
    std::vector<Binomial> reduced = rows;
    for (Binomial& b : reduced) reduce_in_place(b.tail, minimal_index, rows);
    std::sort(reduced.begin(), reduced.end(),
              [this](const Binomial& x, const Binomial& y) {
                return order_.less(x.head, y.head);
              });
    return GroebnerBasis(order_, std::move(reduced));
  }

  const BuchbergerStats& stats() const noexcept { return stats_; }

 private:
  void insert(Binomial h) {
    const std::size_t hi = work_.size();
    work_.push_back(std::move(h));
    active_.push_back(true);
    index_.push_back(work_[hi].head);
    update(hi);
  }

  CriticalPair make_pair(std::size_t i, std::size_t j) {
    Exponent l = lcm(work_[i].head, work_[j].head);
    Coord deg = order_.weighted_degree(l);
    return CriticalPair{i, j, std::move(l), deg, serial_++};
  }

  // Gebauer-Möller installation of the new element `hi`.
  void update(std::size_t hi) {
    const Exponent& h = work_[hi].head;
    std::vector<CriticalPair> fresh;
    std::vector<bool> is_coprime;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      fresh.push_back(make_pair(g, hi));
      is_coprime.push_back(coprime(work_[g].head, h));
    }
    stats_.pairs_created += fresh.size();

    std::vector<CriticalPair> kept;
    if (options_.chain_criterion) {
      std::vector<std::size_t> d_list;
      for (std::size_t c = 0; c < fresh.size(); ++c) {
        bool keep = is_coprime[c];
        if (!keep) {
          keep = true;
          for (std::size_t o = c + 1; o < fresh.size() && keep; ++o) {
            if (divides(fresh[o].lcm, fresh[c].lcm)) keep = false;
          }
          for (std::size_t o : d_list) {
            if (!keep) break;
            if (divides(fresh[o].lcm, fresh[c].lcm)) keep = false;
          }
        }
        if (keep) d_list.push_back(c);
      }
      for (std::size_t c : d_list) {
        if (!is_coprime[c]) kept.push_back(std::move(fresh[c]));
      }
      queue_.erase_if([&](const CriticalPair& p) {
        if (!divides(h, p.lcm)) return false;
        return lcm(work_[p.i].head, h) != p.lcm &&
               lcm(work_[p.j].head, h) != p.lcm;
      });
      for (std::size_t g = 0; g < hi; ++g) {
        if (active_[g] && divides(h, work_[g].head)) {
          active_[g] = false;
          index_.disable(g);
        }
      }
    } else {
      for (std::size_t c = 0; c < fresh.size(); ++c) {
        if (!is_coprime[c]) kept.push_back(std::move(fresh[c]));
      }
    }
    queue_.insert(std::move(kept));
  }

  const TermOrder& order_;
  BuchbergerOptions options_;
  std::vector<Binomial> work_;
  std::vector<bool> active_;
  HeadIndex index_;
  PairQueue queue_;
  std::size_t serial_ = 0;
  BuchbergerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Binomial> generators,
                         const TermOrder& order,
                         const BuchbergerOptions& options,
                         BuchbergerStats* stats) {
  BuchbergerRun run(order, options);
  for (const Binomial& g : generators) {
    require_same_size(order.size(), g.size());
    run.add_generator(g);
  }
  run.run();
  if (stats) *stats = run.stats();
  return run.finish();
}

bool is_groebner_basis(std::span<const Binomial> elements,
                       const TermOrder& order) {
  std::vector<Binomial> rows;
  HeadIndex index(order.size());
  for (const Binomial& b : elements) {
    auto o = orient(b.head, b.tail, order);
    if (!o) continue;
    index.push_back(o->head);
    rows.push_back(std::move(*o));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      auto s = spair(rows[i], rows[j], order);
      if (!s) continue;
      // Polynomial reduction of x^a - x^b: rewrite the leading term until
      // the two terms meet or the leading one is irreducible.
      Exponent a = s->head;
      Exponent b = s->tail;
      while (a != b) {
        if (order.less(a, b)) std::swap(a, b);
        auto r = index.find_last_divisor(a);
        if (!r) return false;
        a = add(subtract(a, rows[*r].head), rows[*r].tail);
      }
    }
  }
  return true;
}

bool is_autoreduced(std::span<const Binomial> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      if (divides(elements[i].head, elements[j].head) ||
          divides(elements[i].head, elements[j].tail)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace clusternet
