#include "clusternet/basis_cache.hpp"

#include <algorithm>
#include <set>

#include "clusternet/colon.hpp"
#include "clusternet/error.hpp"
#include "clusternet/parallel.hpp"

namespace clusternet {

std::vector<BasisKey> keys_for_move(const Move& d) {
  std::vector<BasisKey> keys;
  Exponent dbar(d.size());
  for (std::size_t s = 0; s < d.size(); ++s) {
    if (d[s] >= 0) continue;
    keys.push_back(BasisKey{dbar, s});
    dbar.set(s, -d[s]);
  }
  return keys;
}

std::vector<BasisKey> required_keys(std::span<const Move> D) {
  std::set<BasisKey> keys;
  for (const Move& d : D) {
    for (auto& k : keys_for_move(d)) keys.insert(std::move(k));
  }
  return {keys.begin(), keys.end()};
}

TermOrder BasisCache::default_order(const Grading& grading) {
  const auto g = grading.primary();
  return TermOrder::weighted(std::vector<Coord>(g.begin(), g.end()));
}

BasisCache::BasisCache(Grading grading, std::vector<Binomial> generators,
                       std::shared_ptr<const GroebnerBasis> base)
    : grading_(std::move(grading)),
      generators_(std::move(generators)),
      base_(std::move(base)) {}

BasisCache BasisCache::build(std::span<const Move> U, const Grading& grading,
                             std::span<const BasisKey> keys,
                             std::size_t threads) {
  const TermOrder order = default_order(grading);
  std::vector<Binomial> generators;
  for (const Move& u : U) {
    require_same_size(grading.dimension(), u.size());
    if (!grading.is_homogeneous(u)) {
      throw InvalidArgument("reversible move " + to_string(u) +
                            " is not homogeneous under the grading");
    }
    if (auto b = binomial_from_move(u, order)) generators.push_back(*b);
  }
  auto base = std::make_shared<const GroebnerBasis>(
      buchberger(generators, order));
  BasisCache cache(grading, std::move(generators), std::move(base));

  // Colon generators depend only on dbar; compute each once.
  std::vector<Exponent> dbars;
  for (const auto& k : keys) {
    require_same_size(grading.dimension(), k.dbar.size());
    if (k.j >= grading.dimension()) {
      throw InvalidArgument("basis key variable index out of range");
    }
    dbars.push_back(k.dbar);
  }
  std::sort(dbars.begin(), dbars.end());
  dbars.erase(std::unique(dbars.begin(), dbars.end()), dbars.end());
  std::vector<std::vector<Binomial>> colon_gens(dbars.size());
  parallel_for(dbars.size(), threads, [&](std::size_t i) {
    colon_gens[i] =
        colon_by_monomial(cache.base(), dbars[i], grading.primary());
  });

  std::vector<std::shared_ptr<const GroebnerBasis>> results(keys.size());
  parallel_for(keys.size(), threads, [&](std::size_t i) {
    const auto pos = std::lower_bound(dbars.begin(), dbars.end(), keys[i].dbar);
    results[i] = cache.compute(
        keys[i], colon_gens[static_cast<std::size_t>(pos - dbars.begin())]);
  });
  for (std::size_t i = 0; i < keys.size(); ++i) {
    cache.bases_.emplace(keys[i], std::move(results[i]));
  }
  return cache;
}

std::shared_ptr<const GroebnerBasis> BasisCache::compute(
    const BasisKey& key, const std::vector<Binomial>& colon_gens) const {
  return std::make_shared<const GroebnerBasis>(
      buchberger(colon_gens, make_max_order(grading_.primary(), key.j)));
}

std::shared_ptr<const GroebnerBasis> BasisCache::find(
    const BasisKey& key) const {
  auto it = bases_.find(key);
  return it == bases_.end() ? nullptr : it->second;
}

std::shared_ptr<const GroebnerBasis> BasisCache::get(
    const BasisKey& key) const {
  if (auto hit = find(key)) return hit;
  require_same_size(grading_.dimension(), key.dbar.size());
  if (key.j >= grading_.dimension()) {
    throw InvalidArgument("basis key variable index out of range");
  }
  return compute(key, colon_by_monomial(base(), key.dbar, grading_.primary()));
}

std::vector<BasisKey> BasisCache::keys() const {
  std::vector<BasisKey> out;
  out.reserve(bases_.size());
  for (const auto& [k, v] : bases_) out.push_back(k);
  return out;
}

}  // namespace clusternet
