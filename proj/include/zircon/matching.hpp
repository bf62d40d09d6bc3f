#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zircon/errors.hpp"
#include "zircon/poset.hpp"

namespace zircon {

inline constexpr std::size_t kDefaultMatchingCap = 1'000'000;

/// A perfect matching of the Hasse diagram, held as the involution p ↦ M(p).
struct Matching {
  std::vector<Index> partner;

  Index operator()(Index p) const { return partner[p]; }
  std::size_t size() const { return partner.size(); }

  /// Unordered pairs (a, b) with a < b by index.
  std::vector<Cover> pairs() const {
    std::vector<Cover> out;
    for (Index a = 0; a < partner.size(); ++a)
      if (a < partner[a]) out.emplace_back(a, partner[a]);
    return out;
  }

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;
};

/// Total, fixed-point-free involution whose pairs are all Hasse edges.
inline bool is_matching(const Poset& p, const std::vector<Index>& map) {
  if (map.size() != p.size()) return false;
  for (Index x = 0; x < map.size(); ++x) {
    Index y = map[x];
    if (y >= map.size() || y == x || map[y] != x) return false;
    if (!p.is_cover(x, y) && !p.is_cover(y, x)) return false;
  }
  return true;
}
inline bool is_matching(const Poset& p, const Matching& m) { return is_matching(p, m.partner); }

/// Reads a pair list. Ids must be known and each element may appear at most
/// once; whether the result is a matching is left to `is_matching`.
inline std::vector<Index> mapping_from_pairs(const Poset& p, const std::vector<IdPair>& pairs) {
  std::vector<Index> map(p.size(), p.size());
  for (const auto& [a, b] : pairs) {
    Index ia = p.index(a);
    Index ib = p.index(b);
    if (map[ia] != p.size() || map[ib] != p.size())
      throw InputError("element listed in more than one pair");
    map[ia] = ib;
    map[ib] = ia;
  }
  return map;
}

/// Outcome of the special-matching test; `witness` is a violating cover.
struct SpecialVerdict {
  bool special = false;
  std::optional<Cover> witness;
  explicit operator bool() const { return special; }
};

namespace detail {
inline bool cover_is_special(const Poset& p, const std::vector<Index>& m, Index lo, Index hi) {
  return m[lo] == hi || p.less(m[lo], m[hi]);
}
}  // namespace detail

/// For every cover p ⋖ q: M(p) = q or M(p) < M(q). Reports the first failing
/// cover in index order.
inline SpecialVerdict is_special(const Poset& p, const Matching& m) {
  if (!is_matching(p, m)) throw PreconditionError("is_special: argument is not a matching");
  for (const auto& c : p.covers())
    if (!detail::cover_is_special(p, m.partner, c.first, c.second)) return {false, c};
  return {true, std::nullopt};
}

struct MatchingList {
  std::vector<Matching> matchings;
  bool truncated = false;
};

namespace detail {

// Depth-first pairing of the smallest unmatched element with each free Hasse
// neighbour in index order. With `special_only`, partial assignments are cut as
// soon as a cover with both ends matched violates the special condition.
inline MatchingList search_matchings(const Poset& p, std::size_t cap, bool special_only,
                                     bool first_only = false) {
  MatchingList result;
  bool done = false;
  const std::size_t n = p.size();
  if (n % 2 != 0 || cap == 0) return result;
  const Index free = n;
  std::vector<Index> m(n, free);
  std::vector<std::vector<Index>> neighbors(n);
  for (Index x = 0; x < n; ++x) neighbors[x] = p.hasse_neighbors(x);

  auto locally_special = [&](Index x) {
    for (Index lo : p.lower_covers(x))
      if (m[lo] != free && !cover_is_special(p, m, lo, x)) return false;
    for (Index hi : p.upper_covers(x))
      if (m[hi] != free && !cover_is_special(p, m, x, hi)) return false;
    return true;
  };
  // A free element with no free neighbour can never be matched.
  auto stranded = [&](Index x) {
    for (Index w : neighbors[x]) {
      if (m[w] != free) continue;
      bool any = false;
      for (Index v : neighbors[w])
        if (m[v] == free) {
          any = true;
          break;
        }
      if (!any) return true;
    }
    return false;
  };

  auto recurse = [&](auto&& self, Index start) -> void {
    if (done) return;
    Index u = start;
    while (u < n && m[u] != free) ++u;
    if (u == n) {
      if (result.matchings.size() == cap) {
        result.truncated = true;
        done = true;
        return;
      }
      result.matchings.push_back(Matching{m});
      done = first_only;
      return;
    }
    for (Index v : neighbors[u]) {
      if (m[v] != free) continue;
      m[u] = v;
      m[v] = u;
      bool ok = !stranded(u) && !stranded(v);
      if (ok && special_only) ok = locally_special(u) && locally_special(v);
      if (ok) self(self, u + 1);
      m[u] = free;
      m[v] = free;
      if (done) return;
    }
  };
  recurse(recurse, 0);
  return result;
}

}  // namespace detail

/// All special matchings of p in canonical order, stopping after `cap`
/// (reported through `truncated`). Empty when |p| is odd.
inline MatchingList enumerate_special_matchings(const Poset& p,
                                                std::size_t cap = kDefaultMatchingCap) {
  return detail::search_matchings(p, cap, true);
}

inline std::optional<Matching> find_special_matching(const Poset& p) {
  auto found = detail::search_matchings(p, 1, true, true);
  if (found.matchings.empty()) return std::nullopt;
  return found.matchings.front();
}

/// A failed instance of the lifting property: x < y, M(y) < y, and clause 1
/// (M(x) <= y) or clause 2 (M(x) < x ⇒ M(x) < M(y)) is false.
struct LiftingViolation {
  Index x;
  Index y;
  int clause;
  bool operator==(const LiftingViolation&) const = default;
};

struct LiftingVerdict {
  bool holds = true;
  std::optional<LiftingViolation> witness;
  explicit operator bool() const { return holds; }
};

/// Exhaustive check of the lifting property over all x < y with M(y) < y.
/// Requires M special.
inline LiftingVerdict verify_lifting(const Poset& p, const Matching& m) {
  if (!is_special(p, m)) throw PreconditionError("verify_lifting: matching is not special");
  for (Index y = 0; y < p.size(); ++y) {
    if (!p.less(m(y), y)) continue;
    for (Index x : p.down_set(y)) {
      if (x == y) continue;
      if (!p.leq(m(x), y)) return {false, LiftingViolation{x, y, 1}};
      if (p.less(m(x), x) && !p.less(m(x), m(y))) return {false, LiftingViolation{x, y, 2}};
    }
  }
  return {};
}

}  // namespace zircon
