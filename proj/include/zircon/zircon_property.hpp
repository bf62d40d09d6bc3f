#pragma once

#include "zircon/matching.hpp"
#include "zircon/poset.hpp"

namespace zircon {

/// Every principal ideal below a non-minimal element has a special matching.
/// Finiteness holds by construction.
inline bool is_zircon(const Poset& p) {
  for (Index x = 0; x < p.size(); ++x) {
    if (p.is_minimal(x)) continue;
    if (!find_special_matching(p.principal_ideal(x))) return false;
  }
  return true;
}

/// The ranked formulation: a rank function exists and every principal ideal
/// with more than one element has a special matching. Local finiteness holds
/// by construction.
inline bool is_zircon_ranked(const Poset& p) {
  if (!rank_function(p)) return false;
  for (Index x = 0; x < p.size(); ++x) {
    if (p.down_size(x) <= 1) continue;
    if (!find_special_matching(p.principal_ideal(x))) return false;
  }
  return true;
}

/// The two formulations classify p the same way. Always true unless
/// something is broken.
inline bool definitions_agree(const Poset& p) { return is_zircon(p) == is_zircon_ranked(p); }

/// Every principal ideal has exactly one minimal element.
inline bool ideals_have_unique_minimum(const Poset& p) {
  for (Index x = 0; x < p.size(); ++x) {
    std::size_t minima = 0;
    for (Index z : p.down_set(x))
      if (p.is_minimal(z)) ++minima;
    if (minima != 1) return false;
  }
  return true;
}

}  // namespace zircon
