#pragma once

#include <optional>
#include <string>

#include "clusternet/exponent.hpp"
#include "clusternet/term_order.hpp"

namespace clusternet {

/// The pure-difference binomial x^head - x^tail.
///
/// Oriented binomials satisfy tail < head under the governing order. Heads
/// and tails may share support (S-pairs and colon generators do).
struct Binomial {
  Exponent head;
  Exponent tail;

  std::size_t size() const noexcept { return head.size(); }
  /// head - tail as a signed vector.
  Move as_move() const { return difference(head, tail); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// x^a - x^b with the larger monomial as head; nullopt when a == b.
std::optional<Binomial> orient(Exponent a, Exponent b, const TermOrder& order);

/// x^{u+} - x^{u-} for a transition u, oriented; nullopt for u = 0.
std::optional<Binomial> binomial_from_move(const Move& u,
                                           const TermOrder& order);

std::string to_string(const Binomial& b);

}  // namespace clusternet
