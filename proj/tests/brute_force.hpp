#pragma once

// Naive reference implementations used only by the tests. They work from the
// order relation alone (nested loops, permutation enumeration) and share no
// code path with the library's search routines.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "zircon/poset.hpp"

namespace zircon::brute {

using Relation = std::vector<std::vector<bool>>;

/// Reflexive-transitive closure by Floyd–Warshall on a boolean matrix.
inline Relation closure(std::size_t n, const std::vector<Cover>& pairs) {
  Relation r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [a, b] : pairs) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

/// All pairs x < y with no z strictly between.
inline std::set<Cover> reduction(const Relation& r) {
  std::set<Cover> out;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !r[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && r[i][k] && r[k][j]) between = true;
      if (!between) out.emplace(i, j);
    }
  return out;
}

inline Relation relation_of(const Poset& p) {
  Relation r(p.size(), std::vector<bool>(p.size(), false));
  for (Index i = 0; i < p.size(); ++i)
    for (Index j = 0; j < p.size(); ++j) r[i][j] = p.leq(i, j);
  return r;
}

/// Every permutation f with x <= y ⇔ f(x) <= f(y), in lexicographic order.
inline std::vector<std::vector<Index>> automorphisms(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<Index> f(n);
  std::iota(f.begin(), f.end(), Index{0});
  std::vector<std::vector<Index>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (r[i][j] != r[f[i]][f[j]]) ok = false;
    if (ok) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

inline bool is_cover(const Relation& r, std::size_t a, std::size_t b) {
  return reduction(r).contains({a, b});
}

/// Every fixed-point-free involution pairing cover-related elements, found by
/// scanning all permutations.
inline std::set<std::vector<Index>> perfect_hasse_matchings(const Relation& r) {
  const std::size_t n = r.size();
  auto covers = reduction(r);
  std::set<std::vector<Index>> out;
  std::vector<Index> f(n);
  std::iota(f.begin(), f.end(), Index{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (f[i] == i || f[f[i]] != i) ok = false;
      else if (!covers.contains({i, f[i]}) && !covers.contains({f[i], i})) ok = false;
    }
    if (ok) out.insert(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

/// Definition check: for every cover p ⋖ q, M(p) = q or M(p) < M(q).
inline bool special(const Relation& r, const std::vector<Index>& m) {
  for (const auto& [p, q] : reduction(r))
    if (m[p] != q && !(m[p] != m[q] && r[m[p]][m[q]])) return false;
  return true;
}

/// μ(x, y) from the defining sum, by plain recursion over the relation.
inline std::int64_t mobius(const Relation& r, std::size_t x, std::size_t y) {
  if (x == y) return 1;
  std::int64_t sum = 0;
  for (std::size_t z = 0; z < r.size(); ++z)
    if (z != y && r[x][z] && r[z][y]) sum += mobius(r, x, z);
  return -sum;
}

}  // namespace zircon::brute
