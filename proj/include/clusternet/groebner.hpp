#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clusternet/binomial.hpp"
#include "clusternet/term_order.hpp"

namespace clusternet {

/// Row-major store of monomial heads with support masks, scanned by the
/// active divisibility kernel.
class HeadIndex {
 public:
  explicit HeadIndex(std::size_t n = 0) : n_(n) {}

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return masks_.size(); }

  void push_back(const Exponent& head);
  /// Makes row r unmatchable without renumbering the others.
  void disable(std::size_t r);

  /// Largest row index whose head divides m, if any.
  std::optional<std::size_t> find_last_divisor(const Coord* m,
                                               std::uint64_t m_mask) const;
  std::optional<std::size_t> find_last_divisor(const Exponent& m) const;

 private:
  std::size_t n_;
  std::vector<Coord> heads_;
  std::vector<std::uint64_t> masks_;
};

/// Reduced Gröbner basis of a pure-difference binomial ideal.
///
/// Elements are sorted ascending by head, so scanning for a reducer from
/// the back applies the ≺-largest applicable head first.
class GroebnerBasis {
 public:
  /// Caller guarantees `elements` is a reduced basis oriented under `order`.
  GroebnerBasis(TermOrder order, std::vector<Binomial> elements);

  const TermOrder& order() const noexcept { return order_; }
  std::span<const Binomial> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t dimension() const noexcept { return order_.size(); }

  /// Index of the element with the ≺-largest head dividing m.
  std::optional<std::size_t> find_reducer(const Exponent& m) const;
  /// True if no head divides m.
  bool is_standard(const Exponent& m) const {
    return !find_reducer(m).has_value();
  }

 private:
  TermOrder order_;
  std::vector<Binomial> elements_;
  HeadIndex heads_;
};

/// Unique standard monomial congruent to x^m; the ≺-minimal element of
/// m's congruence class (its cluster).
Exponent normal_form(const Exponent& m, const GroebnerBasis& basis);

/// Same as normal_form but also counts the rewriting steps taken.
Exponent normal_form(const Exponent& m, const GroebnerBasis& basis,
                     std::size_t& steps);

/// y <-> z under the moves that generated the basis.
bool is_connected(const Exponent& y, const Exponent& z,
                  const GroebnerBasis& basis);

/// Oriented S-binomial of f and g, or nullopt when its two terms coincide.
std::optional<Binomial> spair(const Binomial& f, const Binomial& g,
                              const TermOrder& order);

enum class PairSelection {
  /// Smallest lcm first (normal strategy).
  Normal,
  /// Pairs in creation order.
  Fifo,
};

struct BuchbergerOptions {
  PairSelection selection = PairSelection::Normal;
  /// Gebauer-Möller pair elimination on top of the coprime criterion.
  bool chain_criterion = true;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// Generators may be given in either orientation; zero binomials are
/// dropped. The ideal must be homogeneous for some positive grading so that
/// reduction chains stay bounded.
GroebnerBasis buchberger(std::span<const Binomial> generators,
                         const TermOrder& order,
                         const BuchbergerOptions& options = {},
                         BuchbergerStats* stats = nullptr);

/// Buchberger criterion check: every S-pair of `elements` reduces to zero
/// modulo `elements` (with arbitrary, not necessarily reduced, input).
bool is_groebner_basis(std::span<const Binomial> elements,
                       const TermOrder& order);

/// Each head and tail is divisible by no other element's head.
bool is_autoreduced(std::span<const Binomial> elements);

}  // namespace clusternet
