#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zircon/errors.hpp"
#include "zircon/matching.hpp"
#include "zircon/poset.hpp"
#include "zircon/poset_map.hpp"

namespace zircon {

inline constexpr std::size_t kMaxExhaustiveSize = 7;

/// Posets on n elements "0".."n-1" in which i < j implies i precedes j
/// numerically. Every isomorphism class has such a labelling. Element k is
/// added by choosing its strict down-set among the order ideals of 0..k-1.
/// With `canonical`, one representative per isomorphism class is kept (the
/// first generated).
inline std::vector<Poset> enumerate_posets(std::size_t n, bool canonical = true) {
  if (n > kMaxExhaustiveSize)
    throw InputError("exhaustive enumeration is capped at n = " + std::to_string(kMaxExhaustiveSize));
  std::vector<std::vector<std::uint32_t>> labelled;  // strict down-set bitmask per element
  std::vector<std::uint32_t> below(n, 0);
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      labelled.push_back(below);
      return;
    }
    for (std::uint32_t d = 0; d < (std::uint32_t{1} << k); ++d) {
      bool ideal = true;
      for (std::size_t j = 0; j < k && ideal; ++j)
        if ((d >> j & 1U) && (below[j] & ~d) != 0) ideal = false;
      if (!ideal) continue;
      below[k] = d;
      self(self, k + 1);
    }
  };
  extend(extend, 0);

  std::vector<Poset> out;
  std::map<std::vector<detail::Signature>, std::vector<std::size_t>> buckets;
  for (const auto& downs : labelled) {
    std::vector<Cover> relations;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < k; ++j)
        if (downs[k] >> j & 1U) relations.emplace_back(j, k);
    Poset p = Poset::from_index_pairs(numbered_ids(n), relations, Poset::Input::relations);
    if (!canonical) {
      out.push_back(std::move(p));
      continue;
    }
    auto key = detail::signatures(p);
    std::sort(key.begin(), key.end());
    auto& bucket = buckets[key];
    bool seen = false;
    for (std::size_t idx : bucket)
      if (are_isomorphic(out[idx], p)) {
        seen = true;
        break;
      }
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(p));
  }
  return out;
}

/// A named corpus member, e.g. "n4_7" for the eighth class on 4 elements.
struct CorpusEntry {
  std::string name;
  Poset poset;
};

/// Isomorphism classes for every size min_n..max_n.
inline std::vector<CorpusEntry> exhaustive_corpus(std::size_t max_n, std::size_t min_n = 1) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n) {
    auto classes = enumerate_posets(n, true);
    for (std::size_t k = 0; k < classes.size(); ++k)
      out.push_back({"n" + std::to_string(n) + "_" + std::to_string(k), std::move(classes[k])});
  }
  return out;
}

/// Every perfect matching of the Hasse diagram, special or not.
inline std::vector<Matching> enumerate_matchings(const Poset& p) {
  return detail::search_matchings(p, std::numeric_limits<std::size_t>::max(), false).matchings;
}

/// μ(x, y) as entry (x, y) of the inverse zeta matrix, found by back
/// substitution of the unitriangular system Z c = e_y along a linear
/// extension.
inline std::int64_t mobius_oracle(const Poset& p, Index x, Index y) {
  if (!p.leq(x, y)) throw PreconditionError("mobius_oracle: " + p.id(x) + " is not <= " + p.id(y));
  const auto& order = p.linear_extension();
  std::vector<std::int64_t> c(p.size(), 0);
  for (auto i = order.rbegin(); i != order.rend(); ++i) {
    std::int64_t value = *i == y ? 1 : 0;
    for (auto k = order.rbegin(); k != i; ++k)
      if (p.leq(*i, *k)) value -= c[*k];
    c[*i] = value;
  }
  return c[x];
}

/// Random poset: each pair i < j is related with probability `density`, then
/// closed and reduced. Draws come from raw 64-bit Mersenne Twister output, so
/// a seed gives the same poset on every platform.
inline Poset random_poset(std::size_t n, std::uint64_t seed, double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Cover> relations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) relations.emplace_back(i, j);
    }
  return Poset::from_index_pairs(numbered_ids(n), relations, Poset::Input::relations);
}

/// P with a new least element "bottom" and greatest element "top" adjoined.
/// Automorphisms of P extend uniquely, so the completion is a bounded poset
/// carrying the same symmetry.
inline Poset bounded_completion(const Poset& p) {
  if (p.contains("bottom") || p.contains("top")) throw InputError("ids \"bottom\"/\"top\" already in use");
  auto ids = p.ids();
  ids.push_back("bottom");
  ids.push_back("top");
  const Index bottom = p.size(), top = p.size() + 1;
  std::vector<Cover> relations(p.covers().begin(), p.covers().end());
  for (Index x = 0; x < p.size(); ++x) {
    relations.emplace_back(bottom, x);
    relations.emplace_back(x, top);
  }
  relations.emplace_back(bottom, top);
  return Poset::from_index_pairs(std::move(ids), relations, Poset::Input::relations);
}

}  // namespace zircon
