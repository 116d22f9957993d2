#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clusternet/groebner.hpp"

namespace clusternet {

/// Generators of J : x_i.
///
/// Computed from a Gröbner basis of J under make_max_order(grading, i)
/// (recomputed first when `basis` uses another order): every binomial whose
/// two terms are both divisible by x_i is divided by x_i once, the rest are
/// kept. Under that order x_i divides a head only if it divides the tail
/// too, so the output is again a Gröbner basis of J : x_i for that order
/// (not necessarily reduced). `grading` must make J homogeneous.
std::vector<Binomial> colon_by_variable(const GroebnerBasis& basis,
                                        std::size_t i,
                                        std::span<const Coord> grading);

/// Generators of J : x^dbar via (J : x_i) : m = J : (x_i m), recomputing a
/// basis before each single-variable step. dbar = 0 returns the elements of
/// `basis` unchanged.
std::vector<Binomial> colon_by_monomial(const GroebnerBasis& basis,
                                        const Exponent& dbar,
                                        std::span<const Coord> grading);

}  // namespace clusternet
