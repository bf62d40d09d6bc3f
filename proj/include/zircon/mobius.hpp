#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "zircon/errors.hpp"
#include "zircon/poset.hpp"

namespace zircon {

/// μ(x, ·) on the principal filter of x, indexed by element (zero outside it).
/// μ(x,x) = 1 and μ(x,y) = −Σ_{x≤z<y} μ(x,z), swept along a linear extension.
inline std::vector<std::int64_t> mobius_column(const Poset& p, Index x) {
  std::vector<std::int64_t> mu(p.size(), 0);
  std::vector<Index> filter;
  for (Index z : p.linear_extension())
    if (p.leq(x, z)) filter.push_back(z);
  for (Index y : filter) {
    if (y == x) {
      mu[y] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (Index z : filter) {
      if (z == y) break;
      if (p.leq(z, y)) sum += mu[z];
    }
    mu[y] = -sum;
  }
  return mu;
}

inline std::int64_t mobius(const Poset& p, Index x, Index y) {
  if (!p.leq(x, y)) throw PreconditionError("mobius: " + p.id(x) + " is not <= " + p.id(y));
  return mobius_column(p, x)[y];
}

/// Möbius function with one memoized column per lower endpoint. Safe to query
/// from several threads.
class MobiusTable {
 public:
  explicit MobiusTable(const Poset& p) : poset_(&p) {}

  std::int64_t operator()(Index x, Index y) const {
    if (!poset_->leq(x, y))
      throw PreconditionError("mobius: " + poset_->id(x) + " is not <= " + poset_->id(y));
    std::lock_guard lock(mutex_);
    auto it = columns_.find(x);
    if (it == columns_.end()) it = columns_.emplace(x, mobius_column(*poset_, x)).first;
    return it->second[y];
  }

 private:
  const Poset* poset_;
  mutable std::mutex mutex_;
  mutable std::map<Index, std::vector<std::int64_t>> columns_;
};

}  // namespace zircon
