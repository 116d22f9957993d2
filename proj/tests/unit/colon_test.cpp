#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "clusternet/basis_cache.hpp"
#include "clusternet/colon.hpp"
#include "clusternet/groebner.hpp"
#include "clusternet/random_system.hpp"

using namespace clusternet;

namespace {

Binomial bin(Exponent h, Exponent t) { return Binomial{std::move(h), std::move(t)}; }

GroebnerBasis basis_of(const std::vector<Move>& U, const TermOrder& order) {
  std::vector<Binomial> gens;
  for (const Move& u : U) {
    if (auto b = binomial_from_move(u, order)) gens.push_back(*b);
  }
  return buchberger(gens, order);
}

// Same ideal <=> same reduced basis under a fixed order.
bool same_ideal(const std::vector<Binomial>& a, const std::vector<Binomial>& b,
                const TermOrder& order) {
  const auto ga = buchberger(a, order), gb = buchberger(b, order);
  return std::equal(ga.elements().begin(), ga.elements().end(),
                    gb.elements().begin(), gb.elements().end());
}

// y <->_U z  iff  y - dbar <->_V z - dbar, over every pair above dbar in the
// fiber of `degree`. Returns the number of mismatches.
std::size_t colon_mismatches(const std::vector<Move>& U,
                                const std::vector<Binomial>& V,
                                const std::vector<Coord>& g,
                                const Exponent& dbar, Coord degree) {
  const Coord shift = testing::dot(g, dbar);
  if (degree < shift) return 0;
  const auto fiber = testing::brute_fiber(g, degree);
  const auto comp_u = testing::brute_components(fiber, U);
  const auto low = testing::brute_fiber(g, degree - shift);
  const auto comp_v = testing::brute_binomial_components(low, V);
  std::vector<Exponent> above;
  for (const auto& y : fiber) {
    if (divides(dbar, y)) above.push_back(y);
  }
  std::size_t bad = 0;
  for (const auto& y : above) {
    for (const auto& z : above) {
      const bool lhs = comp_u.at(y) == comp_u.at(z);
      const bool rhs =
          comp_v.at(subtract(y, dbar)) == comp_v.at(subtract(z, dbar));
      if (lhs != rhs) ++bad;
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("colon_by_variable: prime binomial is unchanged") {
  const std::vector<Coord> g{2, 1, 1};
  const auto order = make_max_order(g, 2);
  const auto G = basis_of({Move{1, -1, -1}}, order);
  const auto V = colon_by_variable(G, 2, g);
  CHECK(same_ideal(V, {bin({1, 0, 0}, {0, 1, 1})}, order));
  CHECK(colon_mismatches({Move{1, -1, -1}}, V, g, Exponent{0, 0, 1}, 4) == 0);
}

TEST_CASE("colon_by_variable: dividing out x2") {
  const std::vector<Coord> g{2, 1, 1, 1};
  const std::vector<Move> U{Move{1, -1, -1, 0}, Move{1, -1, 0, -1}};
  const auto order = make_max_order(g, 1);
  CHECK(order.weight() == std::vector<Coord>{4, 1, 2, 2});
  const auto G = basis_of(U, order);
  // Reduced basis: x1 - x2 x4 and x2 x3 - x2 x4.
  REQUIRE(G.size() == 2);
  CHECK(same_ideal({G.elements().begin(), G.elements().end()}, {bin({1, 0, 0, 0}, {0, 1, 0, 1}),
                                         bin({0, 1, 1, 0}, {0, 1, 0, 1})},
                   order));
  const auto V = colon_by_variable(G, 1, g);
  const std::vector<Binomial> expected{bin({1, 0, 0, 0}, {0, 1, 1, 0}),
                                       bin({0, 0, 1, 0}, {0, 0, 0, 1})};
  CHECK(same_ideal(V, expected, order));
  // (0,0,1,0) <->_V (0,0,0,1) by brute force.
  const auto comp = testing::brute_binomial_components(
      testing::brute_fiber(g, 1), V);
  CHECK(comp.at(Exponent{0, 0, 1, 0}) == comp.at(Exponent{0, 0, 0, 1}));
  for (Coord d = 1; d <= 5; ++d) {
    CHECK(colon_mismatches(U, V, g, Exponent{0, 1, 0, 0}, d) == 0);
  }
}

TEST_CASE("colon of the zero ideal") {
  const std::vector<Coord> g{1, 1};
  const GroebnerBasis empty(make_max_order(g, 0), {});
  CHECK(colon_by_variable(empty, 0, g).empty());
  CHECK(colon_by_monomial(empty, Exponent{2, 1}, g).empty());
}

TEST_CASE("colon_by_monomial") {
  const std::vector<Coord> g{2, 1, 1, 1};
  const std::vector<Move> U{Move{1, -1, -1, 0}, Move{1, -1, 0, -1}};
  const auto base = basis_of(U, BasisCache::default_order(Grading({g})));
  const auto same = colon_by_monomial(base, Exponent{0, 0, 0, 0}, g);
  CHECK(std::equal(same.begin(), same.end(), base.elements().begin(),
                   base.elements().end()));
  const auto V = colon_by_monomial(base, Exponent{0, 1, 0, 0}, g);
  CHECK(same_ideal(V, {bin({1, 0, 0, 0}, {0, 1, 1, 0}),
                       bin({0, 0, 1, 0}, {0, 0, 0, 1})},
                   make_max_order(g, 1)));
}

TEST_CASE("colon_by_monomial: x2^2 is a nonzerodivisor modulo x1^2 - x2^2") {
  const std::vector<Coord> g{1, 1};
  const std::vector<Move> U{Move{2, -2}};
  const auto base = basis_of(U, BasisCache::default_order(Grading({g})));
  const auto V = colon_by_monomial(base, Exponent{0, 2}, g);
  const auto order = TermOrder::degrevlex(2);
  CHECK(same_ideal(V, {bin({2, 0}, {0, 2})}, order));
  // x1 - x2 is not in the colon: (1,0) and (0,1) stay apart.
  const auto comp = testing::brute_binomial_components(
      testing::brute_fiber(g, 1), V);
  CHECK(comp.at(Exponent{1, 0}) != comp.at(Exponent{0, 1}));
  for (Coord d = 2; d <= 8; ++d) {
    CHECK(colon_mismatches(U, V, g, Exponent{0, 2}, d) == 0);
  }
}

TEST_CASE("colon outputs on random systems") {
  std::mt19937_64 rng(777);
  std::size_t checked = 0;
  for (int sys = 0; sys < 150; ++sys) {
    const auto rs = random_system(rng);
    const auto& ts = rs.transitions;
    const auto& g = ts.grading.rows().front();
    const std::size_t n = g.size();
    const auto base = basis_of(ts.reversible, BasisCache::default_order(ts.grading));
    // Single-variable colon: divided basis is a basis for the max order.
    for (std::size_t i = 0; i < n; ++i) {
      const auto V = colon_by_variable(base, i, g);
      CHECK(is_groebner_basis(V, make_max_order(g, i)));
    }
    std::vector<Coord> d(n);
    for (auto& x : d) x = static_cast<Coord>(rng() % 3);
    const Exponent dbar(d);
    const auto V = colon_by_monomial(base, dbar, g);
    const Coord shift = testing::dot(g, dbar);
    for (Coord extra = 0; extra <= 3; ++extra) {
      CHECK(colon_mismatches(ts.reversible, V, g, dbar, shift + extra) == 0);
      ++checked;
    }
  }
  CHECK(checked == 600);
}
