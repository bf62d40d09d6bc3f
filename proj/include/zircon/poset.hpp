#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zircon/bit_matrix.hpp"
#include "zircon/errors.hpp"

namespace zircon {

using Index = std::size_t;
using Cover = std::pair<Index, Index>;
using IdPair = std::pair<std::string, std::string>;

/// A finite partially ordered set.
///
/// Elements carry opaque string ids and are addressed internally by their
/// position in `ids()`. The order is held twice: as the Hasse diagram (cover
/// pairs) and as its reflexive-transitive closure in packed bit rows, so `leq`
/// is a single bit test. Instances are immutable after construction.
class Poset {
 public:
  /// How the pair list passed to `build` is interpreted.
  enum class Input {
    covers,     ///< pairs must be exactly the cover relation
    relations,  ///< any generating set of strict relations
  };

  Poset() = default;

  static Poset build(std::vector<std::string> ids, std::span<const IdPair> pairs, Input mode) {
    std::unordered_map<std::string, Index> lookup = index_ids(ids);
    std::vector<Cover> indexed;
    indexed.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      auto ia = lookup.find(a);
      auto ib = lookup.find(b);
      if (ia == lookup.end()) throw InputError("unknown element id in pair: " + a);
      if (ib == lookup.end()) throw InputError("unknown element id in pair: " + b);
      indexed.emplace_back(ia->second, ib->second);
    }
    return from_index_pairs(std::move(ids), indexed, mode);
  }

  static Poset from_index_pairs(std::vector<std::string> ids, std::span<const Cover> pairs,
                                Input mode) {
    Poset p;
    p.index_ = index_ids(ids);
    p.ids_ = std::move(ids);
    const std::size_t n = p.ids_.size();

    std::vector<std::vector<Index>> out(n);
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n) throw InputError("pair references an element outside the poset");
      if (a == b) {
        if (mode == Input::covers) throw InputError("cycle detected: self-cover on " + p.ids_[a]);
        continue;
      }
      out[a].push_back(b);
    }
    for (auto& row : out) {
      std::sort(row.begin(), row.end());
      auto dup = std::adjacent_find(row.begin(), row.end());
      if (dup != row.end() && mode == Input::covers)
        throw InputError("redundant cover pair listed twice");
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    p.linear_ = topological_order(out);
    if (p.linear_.size() != n) throw InputError("cycle detected in order relations");

    p.up_ = BitMatrix(n);
    for (auto it = p.linear_.rbegin(); it != p.linear_.rend(); ++it) {
      p.up_.set(*it, *it);
      for (Index j : out[*it]) p.up_.merge_row(*it, j);
    }
    p.fill_down();

    // Every cover of the closure is one of the generating pairs, so only those
    // need testing.
    for (Index a = 0; a < n; ++a) {
      for (Index b : out[a]) {
        if (!BitMatrix::rows_meet_except(p.up_, a, p.down_, b, a, b)) {
          p.covers_.emplace_back(a, b);
        } else if (mode == Input::covers) {
          throw InputError("redundant cover pair (" + p.ids_[a] + ", " + p.ids_[b] +
                           ") is implied by a longer chain");
        }
      }
    }
    p.finish_covers();
    return p;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(Index i) const { return ids_.at(i); }

  bool contains(const std::string& id) const { return index_.contains(id); }
  Index index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown element id: " + id);
    return it->second;
  }

  bool leq(Index x, Index y) const { return up_.test(x, y); }
  bool less(Index x, Index y) const { return x != y && up_.test(x, y); }
  bool leq(const std::string& x, const std::string& y) const { return leq(index(x), index(y)); }
  bool comparable(Index x, Index y) const { return leq(x, y) || leq(y, x); }

  /// Cover pairs (x, y) with x ⋖ y, sorted by index.
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<Index>& upper_covers(Index x) const { return upper_[x]; }
  const std::vector<Index>& lower_covers(Index x) const { return lower_[x]; }
  bool is_cover(Index x, Index y) const {
    return std::binary_search(upper_[x].begin(), upper_[x].end(), y);
  }
  /// Elements covering or covered by x, ascending.
  std::vector<Index> hasse_neighbors(Index x) const {
    std::vector<Index> out;
    std::merge(lower_[x].begin(), lower_[x].end(), upper_[x].begin(), upper_[x].end(),
               std::back_inserter(out));
    return out;
  }

  /// {y : x <= y} and {y : y <= x}, ascending.
  std::vector<Index> up_set(Index x) const { return up_.row_indices(x); }
  std::vector<Index> down_set(Index x) const { return down_.row_indices(x); }
  std::size_t up_size(Index x) const { return up_.row_count(x); }
  std::size_t down_size(Index x) const { return down_.row_count(x); }

  /// A linear extension: every x appears before every y > x.
  const std::vector<Index>& linear_extension() const { return linear_; }

  std::vector<Index> minimal_elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
      if (lower_[i].empty()) out.push_back(i);
    return out;
  }
  std::vector<Index> maximal_elements() const {
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
      if (upper_[i].empty()) out.push_back(i);
    return out;
  }
  bool is_minimal(Index x) const { return lower_[x].empty(); }

  std::optional<Index> bottom() const {
    auto m = minimal_elements();
    if (m.size() == 1) return m.front();
    return std::nullopt;
  }
  std::optional<Index> top() const {
    auto m = maximal_elements();
    if (m.size() == 1) return m.front();
    return std::nullopt;
  }
  /// Unique minimum and unique maximum.
  bool is_bounded() const { return !empty() && bottom() && top(); }

  /// Connected component label of every element in the Hasse diagram, numbered
  /// in order of first appearance.
  std::vector<std::size_t> component_labels() const {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(size(), unset);
    std::size_t next = 0;
    for (Index s = 0; s < size(); ++s) {
      if (label[s] != unset) continue;
      std::vector<Index> stack{s};
      label[s] = next;
      while (!stack.empty()) {
        Index v = stack.back();
        stack.pop_back();
        for (Index w : hasse_neighbors(v)) {
          if (label[w] == unset) {
            label[w] = next;
            stack.push_back(w);
          }
        }
      }
      ++next;
    }
    return label;
  }

  /// Induced subposet. Elements keep their ids and appear in ascending order of
  /// their index in this poset; covers are recomputed inside the subset.
  Poset induced(std::vector<Index> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::vector<std::string> sub_ids;
    sub_ids.reserve(subset.size());
    for (Index i : subset) {
      if (i >= size()) throw InputError("subset references an element outside the poset");
      sub_ids.push_back(ids_[i]);
    }
    BitMatrix sub_up(subset.size());
    for (Index a = 0; a < subset.size(); ++a)
      for (Index b = 0; b < subset.size(); ++b)
        if (leq(subset[a], subset[b])) sub_up.set(a, b);
    return from_closure(std::move(sub_ids), std::move(sub_up));
  }

  Poset induced_by_ids(std::span<const std::string> subset) const {
    std::vector<Index> idx;
    for (const auto& s : subset) idx.push_back(index(s));
    return induced(std::move(idx));
  }

  /// {p : p <= x}
  Poset principal_ideal(Index x) const { return induced(down_set(x)); }

  /// {z : x <= z <= y}
  Poset interval(Index x, Index y) const {
    if (!leq(x, y)) throw PreconditionError("interval: " + ids_[x] + " is not <= " + ids_[y]);
    return induced(interval_elements(x, y));
  }
  std::vector<Index> interval_elements(Index x, Index y) const {
    std::vector<Index> out;
    if (!leq(x, y)) return out;
    for (Index z : up_.row_indices(x))
      if (leq(z, y)) out.push_back(z);
    return out;
  }

  /// Same ids in the same positions and the same order relation.
  bool operator==(const Poset& other) const {
    return ids_ == other.ids_ && up_ == other.up_;
  }

 private:
  static std::unordered_map<std::string, Index> index_ids(const std::vector<std::string>& ids) {
    std::unordered_map<std::string, Index> lookup;
    for (Index i = 0; i < ids.size(); ++i)
      if (!lookup.emplace(ids[i], i).second) throw InputError("duplicate element id: " + ids[i]);
    return lookup;
  }

  // Kahn's algorithm, smallest available index first. Shorter than n on a cycle.
  static std::vector<Index> topological_order(const std::vector<std::vector<Index>>& out) {
    const std::size_t n = out.size();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& row : out)
      for (Index j : row) ++indegree[j];
    std::priority_queue<Index, std::vector<Index>, std::greater<>> ready;
    for (Index i = 0; i < n; ++i)
      if (indegree[i] == 0) ready.push(i);
    std::vector<Index> order;
    order.reserve(n);
    while (!ready.empty()) {
      Index v = ready.top();
      ready.pop();
      order.push_back(v);
      for (Index j : out[v])
        if (--indegree[j] == 0) ready.push(j);
    }
    return order;
  }

  static Poset from_closure(std::vector<std::string> ids, BitMatrix up) {
    Poset p;
    p.index_ = index_ids(ids);
    p.ids_ = std::move(ids);
    p.up_ = std::move(up);
    p.fill_down();
    const std::size_t n = p.ids_.size();
    std::vector<std::vector<Index>> out(n);
    for (Index a = 0; a < n; ++a) {
      for (Index b : p.up_.row_indices(a)) {
        if (a == b) continue;
        if (!BitMatrix::rows_meet_except(p.up_, a, p.down_, b, a, b)) {
          p.covers_.emplace_back(a, b);
          out[a].push_back(b);
        }
      }
    }
    p.linear_ = topological_order(out);
    p.finish_covers();
    return p;
  }

  void fill_down() {
    const std::size_t n = ids_.size();
    down_ = BitMatrix(n);
    for (Index a = 0; a < n; ++a)
      for (Index b : up_.row_indices(a)) down_.set(b, a);
  }

  void finish_covers() {
    std::sort(covers_.begin(), covers_.end());
    upper_.assign(ids_.size(), {});
    lower_.assign(ids_.size(), {});
    for (const auto& [a, b] : covers_) {
      upper_[a].push_back(b);
      lower_[b].push_back(a);
    }
    for (auto& row : lower_) std::sort(row.begin(), row.end());
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Index> index_;
  BitMatrix up_;    // up_(x, y) iff x <= y
  BitMatrix down_;  // down_(y, x) iff x <= y
  std::vector<Cover> covers_;
  std::vector<std::vector<Index>> upper_;
  std::vector<std::vector<Index>> lower_;
  std::vector<Index> linear_;
};

/// Element ids "0", "1", ..., "n-1".
inline std::vector<std::string> numbered_ids(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

/// Assigns rank(y) = rank(x) + 1 along every cover x ⋖ y, normalized so each
/// connected component's lowest level is 0. Absent when the cover constraints
/// are inconsistent or some minimal element sits above its component's lowest
/// level.
inline std::optional<std::vector<int>> rank_function(const Poset& p) {
  constexpr int unset = -1'000'000'000;
  std::vector<int> rank(p.size(), unset);
  for (Index s = 0; s < p.size(); ++s) {
    if (rank[s] != unset) continue;
    std::vector<Index> comp{s};
    rank[s] = 0;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      Index v = comp[head];
      for (Index w : p.upper_covers(v)) {
        if (rank[w] == unset) {
          rank[w] = rank[v] + 1;
          comp.push_back(w);
        } else if (rank[w] != rank[v] + 1) {
          return std::nullopt;
        }
      }
      for (Index w : p.lower_covers(v)) {
        if (rank[w] == unset) {
          rank[w] = rank[v] - 1;
          comp.push_back(w);
        } else if (rank[w] != rank[v] - 1) {
          return std::nullopt;
        }
      }
    }
    int lowest = rank[s];
    for (Index v : comp) lowest = std::min(lowest, rank[v]);
    for (Index v : comp) {
      rank[v] -= lowest;
      if (p.is_minimal(v) && rank[v] != 0) return std::nullopt;
    }
  }
  return rank;
}

}  // namespace zircon
