#include "clusternet/grading.hpp"

#include <algorithm>
#include <numeric>

#include "clusternet/error.hpp"

namespace clusternet {

Grading::Grading(IntMatrix rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw InvalidArgument("grading needs at least one nonempty row");
  }
  for (const auto& row : rows_) require_same_size(dimension(), row.size());
  for (Coord w : rows_.front()) {
    if (w < 1) {
      throw InvalidArgument("first grading row must be strictly positive");
    }
  }
}

std::vector<Coord> Grading::degree(const Exponent& x) const {
  std::vector<Coord> deg;
  deg.reserve(rows_.size());
  for (const auto& row : rows_) deg.push_back(checked_dot(row, x.span()));
  return deg;
}

bool Grading::is_homogeneous(const Move& u) const {
  for (const auto& row : rows_) {
    if (checked_dot(row, u.span()) != 0) return false;
  }
  return true;
}

namespace {

bool strictly_positive(const std::vector<Coord>& v) {
  return !v.empty() &&
         std::all_of(v.begin(), v.end(), [](Coord c) { return c > 0; });
}

void axpy(std::vector<Coord>& acc, Coord c, const std::vector<Coord>& row) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    Coord p;
    if (__builtin_mul_overflow(c, row[i], &p) ||
        __builtin_add_overflow(acc[i], p, &acc[i])) {
      throw ArithmeticOverflow("grading combination overflows");
    }
  }
}

}  // namespace

Grading find_positive_grading(const IntMatrix& A, Coord max_coefficient) {
  if (A.empty() || A.front().empty()) {
    throw NoPositiveGrading("empty balance matrix");
  }
  const std::size_t n = A.front().size();
  for (const auto& row : A) require_same_size(n, row.size());

  std::vector<Coord> sum(n, 0);
  for (const auto& row : A) {
    if (std::all_of(row.begin(), row.end(), [](Coord c) { return c >= 0; })) {
      axpy(sum, 1, row);
    }
  }
  if (strictly_positive(sum)) return Grading({sum});

  const std::size_t m = A.size();
  const auto base = static_cast<std::size_t>(max_coefficient + 1);
  std::size_t combos = 1;
  for (std::size_t r = 0; r < m; ++r) {
    if (combos > 1'000'000 / base) {
      throw NoPositiveGrading("too many rows for the combination search");
    }
    combos *= base;
  }
  // Visit coefficient vectors by increasing total, then lexicographically.
  std::vector<std::vector<Coord>> coefficients;
  coefficients.reserve(combos);
  std::vector<Coord> c(m, 0);
  for (std::size_t k = 0; k < combos; ++k) {
    std::size_t x = k;
    for (std::size_t r = m; r-- > 0;) {
      c[r] = static_cast<Coord>(x % base);
      x /= base;
    }
    coefficients.push_back(c);
  }
  std::stable_sort(coefficients.begin(), coefficients.end(),
                   [](const auto& a, const auto& b) {
                     return std::accumulate(a.begin(), a.end(), Coord{0}) <
                            std::accumulate(b.begin(), b.end(), Coord{0});
                   });
  for (const auto& coeff : coefficients) {
    std::vector<Coord> v(n, 0);
    for (std::size_t r = 0; r < m; ++r) {
      if (coeff[r] != 0) axpy(v, coeff[r], A[r]);
    }
    if (strictly_positive(v)) return Grading({v});
  }
  throw NoPositiveGrading(
      "no strictly positive combination of balance rows with coefficients "
      "up to " +
      std::to_string(max_coefficient));
}

bool check_homogeneous(std::span<const Move> moves, const Grading& grading) {
  return std::all_of(moves.begin(), moves.end(),
                     [&](const Move& u) { return grading.is_homogeneous(u); });
}

bool check_homogeneous(std::span<const Binomial> binomials,
                       const Grading& grading) {
  return std::all_of(binomials.begin(), binomials.end(),
                     [&](const Binomial& b) {
                       return grading.is_homogeneous(b.as_move());
                     });
}

Grading make_positive_multigrading(const IntMatrix& A,
                                   const Grading& grading) {
  const auto g = grading.primary();
  IntMatrix rows{std::vector<Coord>(g.begin(), g.end())};
  for (const auto& a : A) {
    require_same_size(g.size(), a.size());
    Coord k = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      // Least k with a_i + k g_i >= 1, i.e. k >= (1 - a_i) / g_i.
      const Coord need = 1 - a[i];
      if (need > 0) k = std::max(k, (need + g[i] - 1) / g[i]);
    }
    std::vector<Coord> row = a;
    axpy(row, k, rows.front());
    rows.push_back(std::move(row));
  }
  return Grading(std::move(rows));
}

namespace {

class FiberWalker {
 public:
  FiberWalker(const Grading& grading, std::span<const Coord> degree,
              std::size_t cap)
      : rows_(grading.rows()),
        n_(grading.dimension()),
        cap_(cap),
        remaining_(degree.begin(), degree.end()),
        current_(n_, 0) {
    require_same_size(rows_.size(), degree.size());
    // Rows with only nonnegative entries bound the search: their remaining
    // budget can never go negative, and a positive budget needs some later
    // variable with a positive coefficient.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (std::all_of(rows_[r].begin(), rows_[r].end(),
                      [](Coord c) { return c >= 0; })) {
        bounding_.push_back(r);
      }
    }
    positive_suffix_.assign(rows_.size(), std::vector<bool>(n_ + 1, false));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = n_; i-- > 0;) {
        positive_suffix_[r][i] = positive_suffix_[r][i + 1] || rows_[r][i] > 0;
      }
    }
  }

  std::vector<Exponent> run() {
    if (remaining_.front() >= 0 && feasible(0)) visit(0);
    return std::move(out_);
  }

 private:
  bool feasible(std::size_t i) const {
    for (std::size_t r : bounding_) {
      if (remaining_[r] < 0) return false;
      if (remaining_[r] > 0 && !positive_suffix_[r][i]) return false;
    }
    return true;
  }

  void shift(std::size_t i, Coord delta) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      remaining_[r] -= delta * rows_[r][i];
    }
  }

  void visit(std::size_t i) {
    if (i == n_) {
      if (std::all_of(remaining_.begin(), remaining_.end(),
                      [](Coord c) { return c == 0; })) {
        if (out_.size() >= cap_) throw CapExceeded("fiber", out_.size());
        out_.emplace_back(current_);
      }
      return;
    }
    const Coord g = rows_.front()[i];
    Coord hi = remaining_.front() / g;
    Coord lo = 0;
    if (i + 1 == n_) {
      if (remaining_.front() % g != 0) return;
      lo = hi;
    }
    for (Coord v = hi; v >= lo; --v) {
      shift(i, v);
      current_[i] = v;
      if (feasible(i + 1)) visit(i + 1);
      shift(i, -v);
    }
    current_[i] = 0;
  }

  const IntMatrix& rows_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<Coord> remaining_;
  std::vector<Coord> current_;
  std::vector<std::size_t> bounding_;
  std::vector<std::vector<bool>> positive_suffix_;
  std::vector<Exponent> out_;
};

}  // namespace

std::vector<Exponent> fiber_enumerate(const Grading& grading,
                                      std::span<const Coord> degree,
                                      std::size_t cap) {
  return FiberWalker(grading, degree, cap).run();
}

}  // namespace clusternet
