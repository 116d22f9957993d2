#include "clusternet/term_order.hpp"

#include <numeric>

#include "clusternet/error.hpp"

namespace clusternet {

TermOrder::TermOrder(std::vector<Coord> weight,
                     std::vector<std::size_t> tiebreak_perm)
    : weight_(std::move(weight)), perm_(std::move(tiebreak_perm)) {
  require_same_size(weight_.size(), perm_.size());
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) {
      throw InvalidArgument("tiebreak_perm is not a permutation");
    }
    seen[p] = true;
  }
  for (Coord w : weight_) {
    if (w < 1) throw InvalidArgument("term order weights must be >= 1");
  }
}

TermOrder TermOrder::degrevlex(std::size_t n) {
  return weighted(std::vector<Coord>(n, 1));
}

TermOrder TermOrder::weighted(std::vector<Coord> weight) {
  std::vector<std::size_t> perm(weight.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return TermOrder(std::move(weight), std::move(perm));
}

Coord TermOrder::weighted_degree(const Exponent& a) const {
  return checked_dot(weight_, a.span());
}

std::strong_ordering TermOrder::compare(const Exponent& a,
                                        const Exponent& b) const {
  require_same_size(size(), a.size());
  require_same_size(size(), b.size());
  const Coord wa = weighted_degree(a);
  const Coord wb = weighted_degree(b);
  if (wa != wb) return wa <=> wb;
  for (std::size_t k = perm_.size(); k-- > 0;) {
    const std::size_t i = perm_[k];
    if (a[i] != b[i]) {
      return a[i] < b[i] ? std::strong_ordering::greater
                         : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

TermOrder make_max_order(std::span<const Coord> grading, std::size_t j) {
  if (j >= grading.size()) {
    throw InvalidArgument("make_max_order: variable index " +
                          std::to_string(j) + " out of range");
  }
  std::vector<Coord> weight(grading.size());
  for (std::size_t i = 0; i < grading.size(); ++i) {
    if (grading[i] < 1) {
      throw InvalidArgument("make_max_order: grading must be positive");
    }
    if (__builtin_mul_overflow(grading[i], Coord{2}, &weight[i])) {
      throw ArithmeticOverflow("make_max_order: 2g overflows");
    }
  }
  weight[j] -= 1;
  std::vector<std::size_t> perm;
  perm.reserve(grading.size());
  for (std::size_t i = 0; i < grading.size(); ++i) {
    if (i != j) perm.push_back(i);
  }
  perm.push_back(j);
  return TermOrder(std::move(weight), std::move(perm));
}

}  // namespace clusternet
