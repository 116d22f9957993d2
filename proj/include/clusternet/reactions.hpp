#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clusternet/exponent.hpp"
#include "clusternet/grading.hpp"

namespace clusternet {

/// Element/charge balance matrix A: column i is the composition of species
/// i, so every reaction d satisfies A d = 0.
struct BalanceMatrix {
  std::vector<std::string> species;
  std::vector<std::string> row_labels;
  IntMatrix rows;

  std::size_t species_count() const noexcept { return species.size(); }
  /// Throws InvalidArgument on ragged rows or label/row count mismatch.
  void validate() const;

  friend bool operator==(const BalanceMatrix&, const BalanceMatrix&) = default;
};

/// Reversible moves U (each stored once, first nonzero entry positive) and
/// irreversible moves D. The transition set is M = U ∪ -U ∪ D.
struct TransitionSet {
  std::vector<std::string> species;
  std::vector<Move> reversible;
  std::vector<Move> irreversible;
  Grading grading;

  std::size_t dimension() const noexcept { return grading.dimension(); }
  /// M = U ∪ -U ∪ D, sorted.
  std::vector<Move> all_moves() const;

  friend bool operator==(const TransitionSet&, const TransitionSet&) = default;
};

/// One Diophantine system A y = A r for a reactant multiset r.
struct ElementarySystem {
  Exponent reactants;
  /// d = y - r for every solution y != r, in fiber order.
  std::vector<Move> solutions;
};

enum class CountingConvention {
  /// Every (system, solution) pair counts once.
  PerSystem,
  /// Distinct vectors d across all systems count once.
  Distinct,
};

struct ElementaryReactions {
  std::vector<ElementarySystem> systems;
  std::size_t instance_count = 0;
  /// Globally deduplicated reactions, sorted ascending.
  std::vector<Move> distinct;

  std::size_t count(CountingConvention c) const noexcept {
    return c == CountingConvention::PerSystem ? instance_count
                                              : distinct.size();
  }
};

/// The convention that reproduces the published 1022 count on the
/// permanganate/oxalic acid matrix.
inline constexpr CountingConvention kDefaultConvention =
    CountingConvention::Distinct;

/// Enumerates all d in ker(A) with ||d^-||_1 <= max_reactants by solving
/// A y = A r over y >= 0 for every reactant multiset r with
/// 1 <= |r| <= max_reactants. Systems are ordered by |r|, then by the
/// species indices of r. `grading` must be positive and orthogonal to
/// ker(A); it bounds each fiber.
ElementaryReactions enumerate_elementary(const BalanceMatrix& A,
                                         const Grading& grading,
                                         std::size_t max_reactants = 2,
                                         std::size_t fiber_cap = 1'000'000,
                                         std::size_t threads = 1);

/// d is reversible iff -d is also present. Throws InvalidArgument on a
/// zero vector or ragged input.
TransitionSet partition_transitions(const std::vector<Move>& reactions,
                                    std::vector<std::string> species,
                                    Grading grading);

/// final - initial.
Move encode_overall(const Exponent& initial, const Exponent& final_state);

}  // namespace clusternet
