#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zircon/errors.hpp"
#include "zircon/matching.hpp"
#include "zircon/poset.hpp"
#include "zircon/poset_map.hpp"

namespace zircon {

/// f ∘ M ∘ f⁻¹. Special whenever M is, since f is an automorphism.
inline Matching transform_matching(const Poset& p, const Matching& m, const PosetMap& f) {
  if (!is_automorphism(p, f)) throw PreconditionError("transform_matching: map is not an automorphism");
  if (!is_matching(p, m)) throw PreconditionError("transform_matching: argument is not a matching");
  Matching out;
  out.partner.resize(p.size());
  for (Index x = 0; x < p.size(); ++x) out.partner[f(x)] = f(m(x));
  return out;
}

/// The conjugates M_k = φ^k ∘ M ∘ φ^{-k} for k = 1..N, N the order of φ.
struct MatchingFamily {
  Matching base;
  PosetMap automorphism;
  std::size_t order = 1;
  std::vector<Matching> members;  // members[k - 1] is M_k; members.back() == base

  const Matching& member(std::size_t k) const { return members.at(k - 1); }
};

/// Builds the family and checks each member is special.
inline MatchingFamily matching_family(const Poset& p, const Matching& m, const PosetMap& phi) {
  if (!is_automorphism(p, phi)) throw PreconditionError("matching_family: map is not an automorphism");
  if (!is_matching(p, m) || !is_special(p, m))
    throw PreconditionError("matching_family: base matching is not special");
  MatchingFamily family{m, phi, phi.order(), {}};
  family.members.reserve(family.order);
  Matching current = m;
  for (std::size_t k = 1; k <= family.order; ++k) {
    current = transform_matching(p, current, phi);
    if (auto verdict = is_special(p, current); !verdict)
      throw InvariantViolation("matching_family: conjugate M_" + std::to_string(k) +
                               " is not special");
    family.members.push_back(current);
  }
  if (family.members.back() != m) throw InvariantViolation("matching_family: M_N differs from M");
  return family;
}

/// C(p): the connected component of p in the union of the family's matchings,
/// ascending.
inline std::vector<Index> orbit_component(const Poset& p, const MatchingFamily& family, Index start) {
  if (start >= p.size()) throw InputError("orbit_component: element outside the poset");
  std::vector<bool> seen(p.size(), false);
  std::vector<Index> comp{start};
  seen[start] = true;
  for (std::size_t head = 0; head < comp.size(); ++head) {
    for (const auto& mk : family.members) {
      Index next = mk(comp[head]);
      if (!seen[next]) {
        seen[next] = true;
        comp.push_back(next);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

struct Extrema {
  Index min;
  Index max;
  bool operator==(const Extrema&) const = default;
};

/// Minimal and maximal elements of the subposet induced on `comp`, or nothing
/// when either is not unique.
inline std::optional<Extrema> try_component_extrema(const Poset& p, std::span<const Index> comp) {
  std::vector<Index> mins, maxs;
  for (Index a : comp) {
    bool is_min = true, is_max = true;
    for (Index b : comp) {
      if (p.less(b, a)) is_min = false;
      if (p.less(a, b)) is_max = false;
    }
    if (is_min) mins.push_back(a);
    if (is_max) maxs.push_back(a);
  }
  if (mins.size() != 1 || maxs.size() != 1) return std::nullopt;
  return Extrema{mins.front(), maxs.front()};
}

inline Extrema component_extrema(const Poset& p, std::span<const Index> comp) {
  auto e = try_component_extrema(p, comp);
  if (!e) throw InvariantViolation("component_extrema: component lacks a unique minimum or maximum");
  return *e;
}

enum class Direction { down, up };

/// Applies any M_k that moves strictly down (or up) until none does. `priority`
/// is the order in which the k are tried, default 1..N.
inline Index greedy_descend(const Poset& p, const MatchingFamily& family, Index q, Direction dir,
                            std::span<const std::size_t> priority = {}) {
  std::vector<std::size_t> ks(priority.begin(), priority.end());
  if (ks.empty()) {
    ks.resize(family.order);
    std::iota(ks.begin(), ks.end(), std::size_t{1});
  }
  Index current = q;
  for (std::size_t steps = 0; steps <= p.size(); ++steps) {
    bool moved = false;
    for (std::size_t k : ks) {
      Index next = family.member(k)(current);
      if (dir == Direction::down ? p.less(next, current) : p.less(current, next)) {
        current = next;
        moved = true;
        break;
      }
    }
    if (!moved) return current;
  }
  throw InvariantViolation("greedy_descend: no termination");
}

/// Induced subposet on the fixed points of φ.
inline Poset fixed_point_subposet(const Poset& p, const PosetMap& phi) {
  if (!is_automorphism(p, phi)) throw PreconditionError("fixed_point_subposet: map is not an automorphism");
  return p.induced(phi.fixed_points());
}

/// Everything the fixed-point construction computes for one (P, M, φ), with
/// each proof step recorded as a flag instead of thrown.
struct FixedPointAnalysis {
  MatchingFamily family;
  std::vector<std::vector<Index>> components;  // partition of P, ordered by least element
  std::vector<std::size_t> component_of;       // element → position in `components`
  std::vector<std::optional<Extrema>> extrema;
  std::vector<Index> fixed_points;             // P indices, ascending
  Poset subposet;                              // element i is fixed_points[i]
  std::vector<Index> candidate;                // M^φ on subposet indices, npos where undefined

  bool members_special = true;    // every M_k special (else matching_family threw)
  bool extrema_unique = true;     // every component has unique min and max
  bool fixed_extremal = true;     // each fixed p is min or max of C(p)
  bool min_max_fixed_agree = true;  // min C fixed ⇔ max C fixed ⇔ φ(C) = C
  bool is_matching = false;
  SpecialVerdict special;         // meaningful only when is_matching

  static constexpr Index npos = static_cast<Index>(-1);

  bool ok() const {
    return members_special && extrema_unique && fixed_extremal && min_max_fixed_agree &&
           is_matching && special.special;
  }
};

/// Runs the construction M^φ(p) = min C(p) if p = max C(p), else max C(p).
/// Hypothesis failures (unbounded P, non-special M, φ not an automorphism)
/// throw PreconditionError; anything else is recorded in the result.
inline FixedPointAnalysis analyze_fixed_points(const Poset& p, const Matching& m, const PosetMap& phi) {
  if (!p.is_bounded()) throw PreconditionError("fixed-point matching requires a bounded poset");
  FixedPointAnalysis a;
  a.family = matching_family(p, m, phi);
  a.component_of.assign(p.size(), FixedPointAnalysis::npos);
  for (Index x = 0; x < p.size(); ++x) {
    if (a.component_of[x] != FixedPointAnalysis::npos) continue;
    auto comp = orbit_component(p, a.family, x);
    for (Index y : comp) a.component_of[y] = a.components.size();
    a.extrema.push_back(try_component_extrema(p, comp));
    if (!a.extrema.back()) a.extrema_unique = false;
    a.components.push_back(std::move(comp));
  }

  for (std::size_t c = 0; c < a.components.size(); ++c) {
    const auto& comp = a.components[c];
    bool invariant = std::all_of(comp.begin(), comp.end(), [&](Index y) {
      return a.component_of[phi(y)] == c;
    });
    if (!a.extrema[c]) continue;
    bool min_fixed = phi(a.extrema[c]->min) == a.extrema[c]->min;
    bool max_fixed = phi(a.extrema[c]->max) == a.extrema[c]->max;
    if (min_fixed != max_fixed || min_fixed != invariant) a.min_max_fixed_agree = false;
  }

  a.fixed_points = phi.fixed_points();
  if (a.fixed_points.empty()) throw InvariantViolation("bounded poset with no fixed points");
  a.subposet = p.induced(a.fixed_points);

  std::vector<Index> position(p.size(), FixedPointAnalysis::npos);
  for (Index i = 0; i < a.fixed_points.size(); ++i) position[a.fixed_points[i]] = i;

  a.candidate.assign(a.fixed_points.size(), FixedPointAnalysis::npos);
  for (Index i = 0; i < a.fixed_points.size(); ++i) {
    Index x = a.fixed_points[i];
    const auto& ext = a.extrema[a.component_of[x]];
    if (!ext) continue;
    if (x != ext->min && x != ext->max) {
      a.fixed_extremal = false;
      continue;
    }
    Index target = x == ext->max ? ext->min : ext->max;
    if (position[target] != FixedPointAnalysis::npos) a.candidate[i] = position[target];
  }
  a.is_matching = zircon::is_matching(a.subposet, a.candidate);
  if (a.is_matching) a.special = is_special(a.subposet, Matching{a.candidate});
  return a;
}

/// M^φ together with the subposet it lives on.
struct FixedPointMatching {
  Poset subposet;
  std::vector<Index> embedding;  // subposet index → P index
  Matching matching;
};

/// The special matching on the fixed-point subposet. Every step is re-checked;
/// a failure raises InvariantViolation.
inline FixedPointMatching fixed_point_matching(const Poset& p, const Matching& m, const PosetMap& phi) {
  auto a = analyze_fixed_points(p, m, phi);
  if (!a.extrema_unique) throw InvariantViolation("orbit component without unique extrema");
  if (!a.fixed_extremal) throw InvariantViolation("fixed point neither minimal nor maximal in its component");
  if (!a.min_max_fixed_agree) throw InvariantViolation("component extrema disagree on being fixed");
  if (!a.is_matching) throw InvariantViolation("fixed-point construction is not a matching");
  if (!a.special) {
    const auto [lo, hi] = *a.special.witness;
    throw InvariantViolation("fixed-point matching not special at cover (" + a.subposet.id(lo) +
                             ", " + a.subposet.id(hi) + ")");
  }
  return {std::move(a.subposet), std::move(a.fixed_points), Matching{std::move(a.candidate)}};
}

}  // namespace zircon
