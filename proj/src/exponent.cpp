#include "clusternet/exponent.hpp"

#include <algorithm>
#include <limits>

#include "clusternet/error.hpp"
#include "clusternet/kernels.hpp"

namespace clusternet {

namespace {

void require_nonnegative(const std::vector<Coord>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) {
      throw InvalidArgument("negative entry " + std::to_string(v[i]) +
                            " at index " + std::to_string(i) +
                            " in a nonnegative vector");
    }
  }
}

std::string join(std::span<const Coord> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

Exponent::Exponent(std::initializer_list<Coord> init) : v_(init) {
  require_nonnegative(v_);
}

Exponent::Exponent(std::vector<Coord> entries) : v_(std::move(entries)) {
  require_nonnegative(v_);
}

Exponent Exponent::unit(std::size_t n, std::size_t i, Coord value) {
  if (i >= n) throw InvalidArgument("unit vector index out of range");
  Exponent e(n);
  e.set(i, value);
  return e;
}

bool Exponent::is_zero() const noexcept {
  return std::all_of(v_.begin(), v_.end(), [](Coord c) { return c == 0; });
}

Coord Exponent::total() const {
  Coord sum = 0;
  for (Coord c : v_) {
    if (__builtin_add_overflow(sum, c, &sum)) {
      throw ArithmeticOverflow("exponent total overflows int64");
    }
  }
  return sum;
}

void Exponent::set(std::size_t i, Coord value) {
  if (value < 0) throw InvalidArgument("negative exponent entry");
  v_.at(i) = value;
}

bool Move::is_zero() const noexcept {
  return std::all_of(v_.begin(), v_.end(), [](Coord c) { return c == 0; });
}

Exponent Move::positive_part() const {
  Exponent e(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] > 0) e.set(i, v_[i]);
  }
  return e;
}

Exponent Move::negative_part() const {
  Exponent e(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0) {
      if (v_[i] == std::numeric_limits<Coord>::min()) {
        throw ArithmeticOverflow("cannot negate INT64_MIN");
      }
      e.set(i, -v_[i]);
    }
  }
  return e;
}

Move Move::negated() const {
  Move m(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] == std::numeric_limits<Coord>::min()) {
      throw ArithmeticOverflow("cannot negate INT64_MIN");
    }
    m[i] = -v_[i];
  }
  return m;
}

void require_same_size(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

Exponent add(const Exponent& a, const Exponent& b) {
  require_same_size(a.size(), b.size());
  Exponent out(a.size());
  if (kernels::active().add(a.data(), b.data(), out.mutable_data(),
                            a.size()) == kernels::AddStatus::Overflow) {
    throw ArithmeticOverflow("exponent addition overflows int64");
  }
  return out;
}

Exponent subtract(const Exponent& a, const Exponent& b) {
  require_same_size(a.size(), b.size());
  Exponent out(a.size());
  if (kernels::active().sub(a.data(), b.data(), out.mutable_data(),
                            a.size()) != kernels::AddStatus::Ok) {
    throw InvalidArgument("subtract: " + to_string(b) + " is not <= " +
                          to_string(a));
  }
  return out;
}

std::optional<Exponent> apply_move(const Exponent& state, const Move& move) {
  require_same_size(state.size(), move.size());
  Exponent out(state.size());
  switch (kernels::active().add(state.data(), move.data(), out.mutable_data(),
                                state.size())) {
    case kernels::AddStatus::Ok:
      return out;
    case kernels::AddStatus::Negative:
      return std::nullopt;
    case kernels::AddStatus::Overflow:
      break;
  }
  throw ArithmeticOverflow("state + move overflows int64");
}

Move difference(const Exponent& b, const Exponent& a) {
  require_same_size(b.size(), a.size());
  Move m(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) m[i] = b[i] - a[i];
  return m;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  require_same_size(a.size(), b.size());
  Exponent out(a.size());
  kernels::active().max(a.data(), b.data(), out.mutable_data(), a.size());
  return out;
}

bool divides(const Exponent& a, const Exponent& b) {
  require_same_size(a.size(), b.size());
  return kernels::active().leq(a.data(), b.data(), a.size());
}

bool coprime(const Exponent& a, const Exponent& b) {
  require_same_size(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

Coord checked_dot(std::span<const Coord> w, std::span<const Coord> x) {
  require_same_size(w.size(), x.size());
  Coord sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Coord p;
    if (__builtin_mul_overflow(w[i], x[i], &p) ||
        __builtin_add_overflow(sum, p, &sum)) {
      throw ArithmeticOverflow("weighted degree overflows int64");
    }
  }
  return sum;
}

std::string to_string(const Exponent& e) { return join(e.span()); }
std::string to_string(const Move& m) { return join(m.span()); }

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Coord c : e) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace clusternet
