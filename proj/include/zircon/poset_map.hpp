#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zircon/errors.hpp"
#include "zircon/poset.hpp"

namespace zircon {

/// A self-map of a poset's elements, stored by index. Whether it is an order
/// automorphism is checked by `is_automorphism`, not assumed.
struct PosetMap {
  std::vector<Index> image;

  static PosetMap identity(std::size_t n) {
    PosetMap m;
    m.image.resize(n);
    std::iota(m.image.begin(), m.image.end(), Index{0});
    return m;
  }

  std::size_t size() const { return image.size(); }
  Index operator()(Index x) const { return image[x]; }

  /// (*this) ∘ inner
  PosetMap after(const PosetMap& inner) const {
    PosetMap m;
    m.image.reserve(inner.size());
    for (Index x : inner.image) m.image.push_back(image[x]);
    return m;
  }

  PosetMap inverse() const {
    PosetMap m;
    m.image.resize(size());
    for (Index x = 0; x < size(); ++x) m.image[image[x]] = x;
    return m;
  }

  /// k-th power; negative k uses the inverse.
  PosetMap power(long k) const {
    PosetMap base = k < 0 ? inverse() : *this;
    PosetMap result = identity(size());
    for (long i = 0; i < (k < 0 ? -k : k); ++i) result = base.after(result);
    return result;
  }

  bool is_bijection() const {
    std::vector<bool> hit(size(), false);
    for (Index x : image) {
      if (x >= size() || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  }

  bool is_identity() const {
    for (Index x = 0; x < size(); ++x)
      if (image[x] != x) return false;
    return true;
  }

  /// Multiplicative order, as the lcm of the cycle lengths.
  std::size_t order() const {
    std::vector<bool> seen(size(), false);
    std::size_t result = 1;
    for (Index s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0;
      for (Index x = s; !seen[x]; x = image[x]) {
        seen[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::vector<Index> fixed_points() const {
    std::vector<Index> out;
    for (Index x = 0; x < size(); ++x)
      if (image[x] == x) out.push_back(x);
    return out;
  }

  bool operator==(const PosetMap&) const = default;
  auto operator<=>(const PosetMap&) const = default;
};

/// Builds a map from an id → id table; every element must appear exactly once
/// as a key.
inline PosetMap map_from_ids(const Poset& p, const std::map<std::string, std::string>& table) {
  PosetMap m;
  m.image.assign(p.size(), p.size());
  for (const auto& [from, to] : table) m.image[p.index(from)] = p.index(to);
  for (Index x = 0; x < p.size(); ++x)
    if (m.image[x] == p.size()) throw InputError("map is not total: missing " + p.id(x));
  return m;
}

inline std::map<std::string, std::string> map_to_ids(const Poset& p, const PosetMap& m) {
  std::map<std::string, std::string> table;
  for (Index x = 0; x < p.size(); ++x) table.emplace(p.id(x), p.id(m(x)));
  return table;
}

/// Bijective and x <= y  ⇔  f(x) <= f(y).
inline bool is_automorphism(const Poset& p, const PosetMap& f) {
  if (f.size() != p.size() || !f.is_bijection()) return false;
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != p.leq(f(x), f(y))) return false;
  return true;
}

namespace detail {

// Per-element isomorphism invariant. Rank is -1 throughout when the poset is
// not ranked.
using Signature = std::tuple<std::size_t, std::size_t, int, std::size_t, std::size_t>;

inline std::vector<Signature> signatures(const Poset& p) {
  auto rank = rank_function(p);
  std::vector<Signature> sig;
  sig.reserve(p.size());
  for (Index x = 0; x < p.size(); ++x) {
    sig.emplace_back(p.lower_covers(x).size(), p.upper_covers(x).size(),
                     rank ? (*rank)[x] : -1, p.down_size(x), p.up_size(x));
  }
  return sig;
}

// Backtracking search for order isomorphisms p → q. Elements of p are placed in
// (signature, index) order; candidates in q are tried by ascending index.
// `visit` returns false to stop the search.
template <typename Visit>
void search_isomorphisms(const Poset& p, const Poset& q, Visit&& visit) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return;
  auto sig_p = signatures(p);
  auto sig_q = signatures(q);
  {
    auto a = sig_p, b = sig_q;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  const std::size_t n = p.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return sig_p[a] < sig_p[b]; });

  std::vector<std::vector<Index>> candidates(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (sig_p[x] == sig_q[y]) candidates[x].push_back(y);

  std::vector<Index> image(n, n);
  std::vector<bool> used(n, false);
  bool stop = false;

  auto consistent = [&](std::size_t depth, Index x, Index y) {
    for (std::size_t d = 0; d < depth; ++d) {
      Index u = order[d];
      Index v = image[u];
      if (p.leq(u, x) != q.leq(v, y) || p.leq(x, u) != q.leq(y, v)) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == n) {
      if (!visit(PosetMap{image})) stop = true;
      return;
    }
    Index x = order[depth];
    for (Index y : candidates[x]) {
      if (used[y] || !consistent(depth, x, y)) continue;
      image[x] = y;
      used[y] = true;
      self(self, depth + 1);
      used[y] = false;
      image[x] = n;
      if (stop) return;
    }
  };
  recurse(recurse, 0);
}

}  // namespace detail

/// All order automorphisms of p. The identity is always first.
inline std::vector<PosetMap> automorphisms(const Poset& p) {
  std::vector<PosetMap> out;
  detail::search_isomorphisms(p, p, [&](PosetMap m) {
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

/// An order isomorphism p → q (indices of p to indices of q), if any.
inline std::optional<PosetMap> are_isomorphic(const Poset& p, const Poset& q) {
  std::optional<PosetMap> found;
  detail::search_isomorphisms(p, q, [&](PosetMap m) {
    found = std::move(m);
    return false;
  });
  return found;
}

}  // namespace zircon
