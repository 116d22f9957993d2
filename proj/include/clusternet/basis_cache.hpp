#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "clusternet/groebner.hpp"
#include "clusternet/grading.hpp"

namespace clusternet {

/// Identifies the basis of J_U : x^dbar under make_max_order(g, j).
struct BasisKey {
  Exponent dbar;
  std::size_t j = 0;

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// The (dbar, j) keys the coordinate-increment steps of a connectivity test
/// for d visit: for the negative support s_1 < ... < s_k of d, step i uses
/// dbar = sum_{l<i} d^-_{s_l} e_{s_l} and j = s_i.
std::vector<BasisKey> keys_for_move(const Move& d);
/// Union of keys_for_move over D, sorted and deduplicated.
std::vector<BasisKey> required_keys(std::span<const Move> D);

/// Precomputed Gröbner bases for cluster reconstruction: the base basis of
/// J_U under the default order plus one basis per BasisKey.
///
/// Populated once by build(), immutable afterwards. Lookups of keys that
/// were not precomputed fall back to an uncached computation, so all const
/// member functions are safe to call concurrently.
class BasisCache {
 public:
  /// Default order: the primary grading row as weights, identity tie-break.
  static TermOrder default_order(const Grading& grading);

  /// Computes G_U and every requested key on up to `threads` workers.
  static BasisCache build(std::span<const Move> U, const Grading& grading,
                          std::span<const BasisKey> keys,
                          std::size_t threads = 1);

  const GroebnerBasis& base() const noexcept { return *base_; }
  const Grading& grading() const noexcept { return grading_; }
  std::span<const Binomial> generators() const noexcept { return generators_; }

  /// Cached basis for key, or nullptr.
  std::shared_ptr<const GroebnerBasis> find(const BasisKey& key) const;
  /// Cached basis for key, computing an uncached one when absent.
  std::shared_ptr<const GroebnerBasis> get(const BasisKey& key) const;

  std::size_t size() const noexcept { return bases_.size(); }
  std::vector<BasisKey> keys() const;

 private:
  BasisCache(Grading grading, std::vector<Binomial> generators,
             std::shared_ptr<const GroebnerBasis> base);

  std::shared_ptr<const GroebnerBasis> compute(
      const BasisKey& key, const std::vector<Binomial>& colon_gens) const;

  Grading grading_;
  std::vector<Binomial> generators_;
  std::shared_ptr<const GroebnerBasis> base_;
  std::map<BasisKey, std::shared_ptr<const GroebnerBasis>> bases_;
};

}  // namespace clusternet
