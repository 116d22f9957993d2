#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clusternet/binomial.hpp"
#include "clusternet/exponent.hpp"

namespace clusternet {

using IntMatrix = std::vector<std::vector<Coord>>;

/// A positive (multi-)grading deg(x) = W x. The first row is strictly
/// positive, which makes every fiber {x >= 0 : W x = c} finite.
class Grading {
 public:
  Grading() = default;
  explicit Grading(IntMatrix rows);

  std::size_t dimension() const noexcept {
    return rows_.empty() ? 0 : rows_.front().size();
  }
  std::size_t row_count() const noexcept { return rows_.size(); }
  const IntMatrix& rows() const noexcept { return rows_; }
  std::span<const Coord> primary() const noexcept { return rows_.front(); }

  std::vector<Coord> degree(const Exponent& x) const;
  bool is_homogeneous(const Move& u) const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  IntMatrix rows_;
};

/// Sum of the all-nonnegative rows of A when strictly positive; otherwise
/// the first strictly positive combination sum c_r a_r with
/// c_r in [0, max_coefficient], searched by increasing sum c_r. The result
/// lies in the row space of A, hence is orthogonal to ker(A).
Grading find_positive_grading(const IntMatrix& A, Coord max_coefficient = 4);

bool check_homogeneous(std::span<const Move> moves, const Grading& grading);
bool check_homogeneous(std::span<const Binomial> binomials,
                       const Grading& grading);

/// Rows [g, a_1 + k_1 g, ..., a_m + k_m g] with each k_r the least positive
/// integer making every entry of the row >= 1.
Grading make_positive_multigrading(const IntMatrix& A, const Grading& grading);

/// All x in Z^n_+ with deg(x) = degree, in descending lexicographic order.
/// Throws CapExceeded once more than `cap` states would be produced.
std::vector<Exponent> fiber_enumerate(const Grading& grading,
                                      std::span<const Coord> degree,
                                      std::size_t cap);

}  // namespace clusternet
