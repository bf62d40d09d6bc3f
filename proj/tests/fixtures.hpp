#pragma once

#include <string>
#include <vector>

#include "zircon/coxeter.hpp"
#include "zircon/poset.hpp"
#include "zircon/poset_map.hpp"

namespace zircon::fixtures {

inline Poset build(std::vector<std::string> ids, std::vector<IdPair> pairs,
                   Poset::Input mode = Poset::Input::covers) {
  return Poset::build(std::move(ids), pairs, mode);
}

/// 0 ⋖ 1, 0 ⋖ 2, 1 ⋖ 3, 2 ⋖ 3
inline Poset diamond() {
  return build({"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}});
}

/// a ⋖ c, a ⋖ d, b ⋖ d
inline Poset n_poset() {
  return build({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "d"}});
}

inline Poset chain(std::size_t k) {
  std::vector<Cover> covers;
  for (std::size_t i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_index_pairs(numbered_ids(k), covers, Poset::Input::covers);
}

inline Poset antichain(std::size_t k) {
  return Poset::from_index_pairs(numbered_ids(k), {}, Poset::Input::covers);
}

/// Bruhat order of A2: e, s1, s2, s1s2, s2s1, s1s2s1.
inline Poset hexagon() { return bruhat_poset(CoxeterSystem::build(CoxeterType::parse("A2"))); }

/// The diagram flip s1 ↔ s2 on the hexagon. Its automorphism group has order
/// four (atoms and coatoms swap independently); this is the one that also
/// exchanges s1s2 and s2s1.
inline PosetMap hexagon_flip(const Poset& h) {
  return map_from_ids(h, {{"e", "e"}, {"s1", "s2"}, {"s2", "s1"}, {"s1s2", "s2s1"}, {"s2s1", "s1s2"},
                          {"s1s2s1", "s1s2s1"}});
}

}  // namespace zircon::fixtures
