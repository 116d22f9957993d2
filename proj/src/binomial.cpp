#include "clusternet/binomial.hpp"

namespace clusternet {

std::optional<Binomial> orient(Exponent a, Exponent b, const TermOrder& order) {
  auto c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{std::move(a), std::move(b)};
  return Binomial{std::move(b), std::move(a)};
}

std::optional<Binomial> binomial_from_move(const Move& u,
                                           const TermOrder& order) {
  return orient(u.positive_part(), u.negative_part(), order);
}

std::string to_string(const Binomial& b) {
  return "x^" + to_string(b.head) + " - x^" + to_string(b.tail);
}

}  // namespace clusternet
