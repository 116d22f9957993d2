#pragma once

// Brute-force helpers shared by the unit and acceptance suites. Nothing here
// calls into the Gröbner code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "clusternet/binomial.hpp"
#include "clusternet/exponent.hpp"
#include "clusternet/grading.hpp"
#include "clusternet/reactions.hpp"

namespace testing {

using clusternet::Coord;
using clusternet::Exponent;
using clusternet::Move;

/// Every x in the box [0, bound]^n with w·x == degree, by plain counting.
inline std::vector<Exponent> brute_fiber(const std::vector<Coord>& w,
                                         Coord degree) {
  const std::size_t n = w.size();
  std::vector<Exponent> out;
  std::vector<Coord> x(n, 0);
  std::function<void(std::size_t, Coord)> rec = [&](std::size_t i, Coord used) {
    if (i == n) {
      if (used == degree) out.emplace_back(x);
      return;
    }
    for (Coord k = 0; used + k * w[i] <= degree; ++k) {
      x[i] = k;
      rec(i + 1, used + k * w[i]);
    }
    x[i] = 0;
  };
  rec(0, 0);
  return out;
}

/// Component labels of `states` under the moves ±m for m in `moves`;
/// `states` must be closed under them.
inline std::map<Exponent, std::size_t> brute_components(
    const std::vector<Exponent>& states, const std::vector<Move>& moves) {
  std::map<Exponent, std::size_t> label;
  std::size_t next = 0;
  for (const Exponent& s : states) {
    if (label.count(s)) continue;
    std::vector<Exponent> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Exponent x = stack.back();
      stack.pop_back();
      for (const Move& m : moves) {
        for (int sign : {1, -1}) {
          std::vector<Coord> y(x.size());
          bool ok = true;
          for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] = x[i] + sign * m[i];
            ok = ok && y[i] >= 0;
          }
          if (!ok) continue;
          Exponent e(y);
          if (label.emplace(e, next).second) stack.push_back(e);
        }
      }
    }
    ++next;
  }
  return label;
}

/// Components under general binomial moves: x >= head gives x - head + tail
/// and vice versa.
inline std::map<Exponent, std::size_t> brute_binomial_components(
    const std::vector<Exponent>& states,
    const std::vector<clusternet::Binomial>& bins) {
  std::map<Exponent, std::size_t> label;
  std::size_t next = 0;
  for (const Exponent& s : states) {
    if (label.count(s)) continue;
    std::vector<Exponent> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Exponent x = stack.back();
      stack.pop_back();
      for (const auto& b : bins) {
        for (int side = 0; side < 2; ++side) {
          const Exponent& from = side ? b.tail : b.head;
          const Exponent& to = side ? b.head : b.tail;
          std::vector<Coord> y(x.size());
          bool ok = true;
          for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] = x[i] - from[i] + to[i];
            ok = ok && x[i] >= from[i];
          }
          if (!ok) continue;
          Exponent e(y);
          if (label.emplace(e, next).second) stack.push_back(e);
        }
      }
    }
    ++next;
  }
  return label;
}

inline Coord dot(const std::vector<Coord>& w, const Exponent& x) {
  Coord s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

inline clusternet::TransitionSet make_system(std::vector<Move> U,
                                             std::vector<Move> D,
                                             std::vector<Coord> g) {
  clusternet::TransitionSet ts;
  for (std::size_t i = 0; i < g.size(); ++i) {
    ts.species.push_back("s" + std::to_string(i));
  }
  ts.reversible = std::move(U);
  ts.irreversible = std::move(D);
  ts.grading = clusternet::Grading({std::move(g)});
  return ts;
}

/// U = {x1 - x2}, D = {x2 -> x3}, all weights 1.
inline clusternet::TransitionSet toy_system() {
  return make_system({Move{1, -1, 0}}, {Move{0, -1, 1}}, {1, 1, 1});
}

/// Clusters A = {x1, x2}, B = {x3}, C = {x4}; A -> B by two labels,
/// B -> C by one.
inline clusternet::TransitionSet diamond_system() {
  return make_system({Move{1, -1, 0, 0}},
                     {Move{-1, 0, 1, 0}, Move{0, -1, 1, 0}, Move{0, 0, -1, 1}},
                     {1, 1, 1, 1});
}

/// Singleton clusters; x1 -> x2 -> x4 and x1 -> x3 -> x4.
inline clusternet::TransitionSet two_route_system() {
  return make_system({},
                     {Move{-1, 1, 0, 0}, Move{-1, 0, 1, 0}, Move{0, -1, 0, 1},
                      Move{0, 0, -1, 1}},
                     {1, 1, 1, 1});
}

}  // namespace testing
