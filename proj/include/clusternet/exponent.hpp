#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clusternet {

using Coord = std::int64_t;

/// A vector in Z^n_+: a state, or the exponent of a monomial x^a.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t n) : v_(n, 0) {}
  Exponent(std::initializer_list<Coord> init);
  /// Throws InvalidArgument if any entry is negative.
  explicit Exponent(std::vector<Coord> entries);

  static Exponent unit(std::size_t n, std::size_t i, Coord value = 1);

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  Coord operator[](std::size_t i) const noexcept { return v_[i]; }
  const Coord* data() const noexcept { return v_.data(); }
  std::span<const Coord> span() const noexcept { return v_; }
  const std::vector<Coord>& values() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  bool is_zero() const noexcept;
  Coord total() const;

  /// Unchecked write access for kernels that maintain nonnegativity.
  Coord* mutable_data() noexcept { return v_.data(); }
  void set(std::size_t i, Coord value);

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

 private:
  std::vector<Coord> v_;
};

/// An integer transition vector in Z^n (may have negative entries).
class Move {
 public:
  Move() = default;
  explicit Move(std::size_t n) : v_(n, 0) {}
  Move(std::initializer_list<Coord> init) : v_(init) {}
  explicit Move(std::vector<Coord> entries) : v_(std::move(entries)) {}

  std::size_t size() const noexcept { return v_.size(); }
  Coord operator[](std::size_t i) const noexcept { return v_[i]; }
  Coord& operator[](std::size_t i) noexcept { return v_[i]; }
  const Coord* data() const noexcept { return v_.data(); }
  std::span<const Coord> span() const noexcept { return v_; }
  const std::vector<Coord>& values() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  bool is_zero() const noexcept;
  Exponent positive_part() const;
  Exponent negative_part() const;
  Move negated() const;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;

 private:
  std::vector<Coord> v_;
};

// Checked componentwise arithmetic. All of these throw DimensionMismatch on
// length disagreement and ArithmeticOverflow rather than wrapping.

Exponent add(const Exponent& a, const Exponent& b);
/// a - b; throws InvalidArgument unless b <= a componentwise.
Exponent subtract(const Exponent& a, const Exponent& b);
/// state + move when the result is nonnegative, otherwise nullopt.
std::optional<Exponent> apply_move(const Exponent& state, const Move& move);
/// b - a as a signed vector.
Move difference(const Exponent& b, const Exponent& a);
/// Componentwise max.
Exponent lcm(const Exponent& a, const Exponent& b);
/// a <= b componentwise, i.e. x^a divides x^b.
bool divides(const Exponent& a, const Exponent& b);
bool coprime(const Exponent& a, const Exponent& b);

Coord checked_dot(std::span<const Coord> w, std::span<const Coord> x);

void require_same_size(std::size_t expected, std::size_t actual);

std::string to_string(const Exponent& e);
std::string to_string(const Move& m);

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

}  // namespace clusternet
