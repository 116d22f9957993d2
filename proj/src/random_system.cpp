#include "clusternet/random_system.hpp"

#include <algorithm>
#include <string>

namespace clusternet {

namespace {

Coord uniform(std::mt19937_64& rng, Coord lo, Coord hi) {
  return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

}  // namespace

Move random_homogeneous_move(std::mt19937_64& rng, std::span<const Coord> g,
                             Coord bound) {
  const std::size_t n = g.size();
  std::vector<Coord> v(n);
  for (int attempt = 0; attempt < 400; ++attempt) {
    Coord dot = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = uniform(rng, -bound, bound);
      dot += v[i] * g[i];
      nonzero = nonzero || v[i] != 0;
    }
    if (!nonzero || dot != 0) continue;
    return Move(v);
  }
  return Move(std::vector<Coord>(n, 0));
}

Exponent random_state(std::mt19937_64& rng, std::size_t n, Coord total) {
  std::vector<Coord> v(n, 0);
  const Coord units = uniform(rng, 1, std::max<Coord>(total, 1));
  for (Coord k = 0; k < units; ++k) {
    ++v[static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(n) - 1))];
  }
  return Exponent(v);
}

RandomSystem random_system(std::mt19937_64& rng,
                           const RandomSystemShape& shape) {
  const auto n = static_cast<std::size_t>(
      uniform(rng, static_cast<Coord>(shape.min_species),
              static_cast<Coord>(shape.max_species)));
  std::vector<Coord> g(n);
  for (auto& w : g) w = uniform(rng, 1, shape.max_weight);

  auto draw = [&](std::size_t max_count, std::vector<Move>& out) {
    const auto count = static_cast<std::size_t>(
        uniform(rng, 1, static_cast<Coord>(max_count)));
    for (std::size_t k = 0; k < count; ++k) {
      Move m = random_homogeneous_move(rng, g, shape.max_entry);
      bool zero = std::all_of(m.values().begin(), m.values().end(),
                              [](Coord c) { return c == 0; });
      if (zero) continue;
      out.push_back(std::move(m));
    }
  };

  RandomSystem sys;
  TransitionSet& ts = sys.transitions;
  for (std::size_t i = 0; i < n; ++i) ts.species.push_back("s" + std::to_string(i));
  ts.grading = Grading({g});
  std::vector<Move> u, d;
  draw(shape.max_reversible, u);
  draw(shape.max_irreversible, d);
  // Store reversible moves once, first nonzero entry positive.
  for (Move& m : u) {
    auto first = std::find_if(m.values().begin(), m.values().end(),
                              [](Coord c) { return c != 0; });
    if (*first < 0) m = m.negated();
    if (std::find(ts.reversible.begin(), ts.reversible.end(), m) ==
        ts.reversible.end()) {
      ts.reversible.push_back(m);
    }
  }
  for (Move& m : d) {
    if (std::find(ts.irreversible.begin(), ts.irreversible.end(), m) ==
        ts.irreversible.end()) {
      ts.irreversible.push_back(m);
    }
  }
  const std::size_t starts = static_cast<std::size_t>(uniform(rng, 1, 2));
  for (std::size_t k = 0; k < starts; ++k) {
    sys.initial.push_back(random_state(rng, n, shape.max_state_total));
  }
  return sys;
}

}  // namespace clusternet
