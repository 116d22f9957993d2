#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "clusternet/exponent.hpp"

namespace clusternet {

/// Weighted degree reverse lexicographic order.
///
/// Monomials are compared by weight·a first. Ties are broken by degrevlex
/// on the coordinates permuted by `tiebreak_perm`: a is larger iff the last
/// nonzero entry of the permuted a - b is negative. The variable listed last
/// in the permutation is therefore the cheapest one. Because every weight is
/// at least 1, this is a genuine term order (1 is the minimum).
class TermOrder {
 public:
  TermOrder(std::vector<Coord> weight, std::vector<std::size_t> tiebreak_perm);

  /// Unit weights, identity permutation.
  static TermOrder degrevlex(std::size_t n);
  /// The given weights with the identity permutation.
  static TermOrder weighted(std::vector<Coord> weight);

  std::size_t size() const noexcept { return weight_.size(); }
  const std::vector<Coord>& weight() const noexcept { return weight_; }
  const std::vector<std::size_t>& tiebreak_perm() const noexcept {
    return perm_;
  }

  Coord weighted_degree(const Exponent& a) const;
  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const {
    return compare(a, b) < 0;
  }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::vector<Coord> weight_;
  std::vector<std::size_t> perm_;
};

inline std::strong_ordering compare(const TermOrder& order, const Exponent& a,
                                    const Exponent& b) {
  return order.compare(a, b);
}

/// Order in which normal forms maximize coordinate j on every fiber of a
/// grading-homogeneous ideal: weight 2g - e_j, tie-break with j last.
/// Minimizing (2g - e_j)·x on a fixed g·x fiber is the same as maximizing
/// x_j. `j` is zero-based.
TermOrder make_max_order(std::span<const Coord> grading, std::size_t j);

}  // namespace clusternet
