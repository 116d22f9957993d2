#include "clusternet/colon.hpp"

#include "clusternet/error.hpp"
#include "clusternet/term_order.hpp"

namespace clusternet {

namespace {

std::vector<Binomial> divide_out(std::span<const Binomial> elements,
                                 std::size_t i) {
  std::vector<Binomial> out;
  out.reserve(elements.size());
  for (const Binomial& b : elements) {
    Binomial c = b;
    if (b.head[i] >= 1 && b.tail[i] >= 1) {
      c.head.set(i, b.head[i] - 1);
      c.tail.set(i, b.tail[i] - 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Binomial> colon_by_variable(const GroebnerBasis& basis,
                                        std::size_t i,
                                        std::span<const Coord> grading) {
  require_same_size(basis.dimension(), grading.size());
  const TermOrder order = make_max_order(grading, i);
  if (basis.order() == order) return divide_out(basis.elements(), i);
  const GroebnerBasis rebased = buchberger(basis.elements(), order);
  return divide_out(rebased.elements(), i);
}

std::vector<Binomial> colon_by_monomial(const GroebnerBasis& basis,
                                        const Exponent& dbar,
                                        std::span<const Coord> grading) {
  require_same_size(basis.dimension(), dbar.size());
  require_same_size(basis.dimension(), grading.size());
  std::vector<Binomial> gens(basis.elements().begin(), basis.elements().end());
  if (dbar.is_zero()) return gens;
  for (std::size_t i = 0; i < dbar.size(); ++i) {
    for (Coord k = 0; k < dbar[i]; ++k) {
      const GroebnerBasis step = buchberger(gens, make_max_order(grading, i));
      gens = divide_out(step.elements(), i);
    }
  }
  return gens;
}

}  // namespace clusternet
