#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "clusternet/reactions.hpp"

namespace clusternet {

/// Shape of a random homogeneous transition system.
struct RandomSystemShape {
  std::size_t min_species = 2;
  std::size_t max_species = 5;
  std::size_t max_reversible = 4;
  std::size_t max_irreversible = 3;
  Coord max_entry = 2;
  Coord max_weight = 2;
  /// Total units in each random initial state.
  Coord max_state_total = 4;
};

struct RandomSystem {
  TransitionSet transitions;
  std::vector<Exponent> initial;
};

/// A random system: grading weights in [1, max_weight], moves with entries
/// in [-max_entry, max_entry] that are homogeneous under it, and one or two
/// initial states. Species are named s0, s1, ...
RandomSystem random_system(std::mt19937_64& rng,
                           const RandomSystemShape& shape = {});

/// A nonzero g-homogeneous vector with entries in [-bound, bound], or the
/// zero vector if none turned up within the attempt budget.
Move random_homogeneous_move(std::mt19937_64& rng, std::span<const Coord> g,
                             Coord bound);

/// A state with entries summing to at most `total`.
Exponent random_state(std::mt19937_64& rng, std::size_t n, Coord total);

}  // namespace clusternet
