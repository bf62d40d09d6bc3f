#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "zircon/errors.hpp"
#include "zircon/matching.hpp"
#include "zircon/poset.hpp"
#include "zircon/poset_map.hpp"

namespace zircon {

inline constexpr std::size_t kDefaultOrderCap = 50'000;

enum class CoxeterFamily { A, B, D, I2 };

/// A finite Coxeter type: A_n, B_n, D_n or the dihedral I2(m).
struct CoxeterType {
  CoxeterFamily family = CoxeterFamily::A;
  int rank = 1;  // number of generators
  int m = 0;     // dihedral parameter, I2 only

  /// Accepts "A3", "B3", "D4", "I2:7".
  static CoxeterType parse(std::string_view spec) {
    auto number = [&](std::string_view digits) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw InputError("invalid Coxeter type spec: " + std::string(spec));
      return value;
    };
    if (spec.starts_with("I2:")) {
      CoxeterType t{CoxeterFamily::I2, 2, number(spec.substr(3))};
      if (t.m < 2) throw InputError("I2(m) needs m >= 2");
      return t;
    }
    if (spec.empty()) throw InputError("empty Coxeter type spec");
    CoxeterType t;
    switch (spec.front()) {
      case 'A': t.family = CoxeterFamily::A; break;
      case 'B': t.family = CoxeterFamily::B; break;
      case 'D': t.family = CoxeterFamily::D; break;
      default: throw InputError("invalid Coxeter type spec: " + std::string(spec));
    }
    t.rank = number(spec.substr(1));
    int least = t.family == CoxeterFamily::D ? 2 : 1;
    if (t.rank < least) throw InputError("rank too small in Coxeter type spec: " + std::string(spec));
    return t;
  }

  std::string name() const {
    switch (family) {
      case CoxeterFamily::A: return "A" + std::to_string(rank);
      case CoxeterFamily::B: return "B" + std::to_string(rank);
      case CoxeterFamily::D: return "D" + std::to_string(rank);
      case CoxeterFamily::I2: return "I2:" + std::to_string(m);
    }
    return {};
  }

  /// |W| from the closed formulas, saturating at `limit + 1`.
  std::size_t group_order(std::size_t limit) const {
    auto mul = [limit](std::size_t a, std::size_t b) {
      return a > (limit + 1) / std::max<std::size_t>(b, 1) ? limit + 1 : a * b;
    };
    std::size_t order = 1;
    switch (family) {
      case CoxeterFamily::A:
        for (int k = 2; k <= rank + 1; ++k) order = mul(order, k);
        return order;
      case CoxeterFamily::B:
      case CoxeterFamily::D:
        for (int k = 2; k <= rank; ++k) order = mul(order, k);
        for (int k = family == CoxeterFamily::B ? 0 : 1; k < rank; ++k) order = mul(order, 2);
        return order;
      case CoxeterFamily::I2: return mul(2, static_cast<std::size_t>(m));
    }
    return order;
  }

  /// Coxeter matrix of the preset labelling, generators 0-based.
  ///   A_n: a path.  B_n: s1–s2 labelled 4, then a path.
  ///   D_n: s1 and s2 both attached to s3, then a path.  I2(m): m.
  int coxeter_entry(int i, int j) const {
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    switch (family) {
      case CoxeterFamily::A: return j == i + 1 ? 3 : 2;
      case CoxeterFamily::B:
        if (i == 0 && j == 1) return 4;
        return j == i + 1 ? 3 : 2;
      case CoxeterFamily::D:
        if (i == 0) return j == 2 ? 3 : 2;
        return j == i + 1 ? 3 : 2;
      case CoxeterFamily::I2: return m;
    }
    return 2;
  }
};

/// Concrete group element: a one-line permutation (A), a signed permutation
/// with values ±1..±n (B, D), or {rotation, reflection} (I2).
using GroupModel = std::vector<int>;

namespace detail {

inline GroupModel model_identity(const CoxeterType& t) {
  GroupModel g;
  switch (t.family) {
    case CoxeterFamily::A:
      g.resize(static_cast<std::size_t>(t.rank) + 1);
      std::iota(g.begin(), g.end(), 0);
      return g;
    case CoxeterFamily::B:
    case CoxeterFamily::D:
      g.resize(static_cast<std::size_t>(t.rank));
      std::iota(g.begin(), g.end(), 1);
      return g;
    case CoxeterFamily::I2: return {0, 0};
  }
  return g;
}

// a ∘ b (b acts first).
inline GroupModel model_compose(const CoxeterType& t, const GroupModel& a, const GroupModel& b) {
  GroupModel out(b.size());
  switch (t.family) {
    case CoxeterFamily::A:
      for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
      return out;
    case CoxeterFamily::B:
    case CoxeterFamily::D:
      for (std::size_t i = 0; i < b.size(); ++i) {
        int v = b[i];
        int image = a[static_cast<std::size_t>(std::abs(v) - 1)];
        out[i] = v < 0 ? -image : image;
      }
      return out;
    case CoxeterFamily::I2: {
      // x ↦ ε_a(ε_b x + r_b) + r_a
      int rb = a[1] ? -b[0] : b[0];
      out[0] = ((a[0] + rb) % t.m + t.m) % t.m;
      out[1] = a[1] ^ b[1];
      return out;
    }
  }
  return out;
}

inline std::vector<GroupModel> model_generators(const CoxeterType& t) {
  std::vector<GroupModel> gens;
  const GroupModel id = model_identity(t);
  switch (t.family) {
    case CoxeterFamily::A:
      for (int i = 1; i <= t.rank; ++i) {
        GroupModel g = id;
        std::swap(g[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
        gens.push_back(g);
      }
      break;
    case CoxeterFamily::B:
    case CoxeterFamily::D: {
      GroupModel first = id;
      if (t.family == CoxeterFamily::B) {
        first[0] = -1;
      } else {
        first[0] = -2;
        first[1] = -1;
      }
      gens.push_back(first);
      for (int i = 2; i <= t.rank; ++i) {
        GroupModel g = id;
        std::swap(g[static_cast<std::size_t>(i - 2)], g[static_cast<std::size_t>(i - 1)]);
        gens.push_back(g);
      }
      break;
    }
    case CoxeterFamily::I2:
      gens.push_back({0, 1});
      gens.push_back({1, 1});
      break;
  }
  return gens;
}

}  // namespace detail

/// A finite Coxeter group with its full element table.
///
/// Elements are numbered in ShortLex order of their lexicographically least
/// reduced word (generator order s1 < s2 < ...), so index 0 is the identity.
/// Multiplication by generators is tabulated on both sides.
class CoxeterSystem {
 public:
  static CoxeterSystem build(const CoxeterType& type, std::size_t order_cap = kDefaultOrderCap) {
    const std::size_t expected = type.group_order(order_cap);
    if (expected > order_cap)
      throw PreconditionError("group " + type.name() + " exceeds the order cap of " +
                              std::to_string(order_cap));
    CoxeterSystem w;
    w.type_ = type;
    w.generators_ = detail::model_generators(type);
    const std::size_t r = w.generators_.size();

    w.add(detail::model_identity(type), {}, 0);
    for (std::size_t head = 0; head < w.models_.size(); ++head) {
      for (std::size_t s = 0; s < r; ++s) {
        GroupModel next = detail::model_compose(type, w.models_[head], w.generators_[s]);
        if (w.lookup_.contains(next)) continue;
        auto word = w.words_[head];
        word.push_back(static_cast<int>(s));
        w.add(std::move(next), std::move(word), w.lengths_[head] + 1);
      }
    }
    if (w.models_.size() != expected)
      throw InvariantViolation("element count of " + type.name() + " differs from its group order");

    const std::size_t n = w.models_.size();
    w.right_.assign(n, std::vector<Index>(r));
    w.left_.assign(n, std::vector<Index>(r));
    w.inverse_.resize(n);
    for (Index x = 0; x < n; ++x) {
      for (std::size_t s = 0; s < r; ++s) {
        w.right_[x][s] = w.find(detail::model_compose(type, w.models_[x], w.generators_[s]));
        w.left_[x][s] = w.find(detail::model_compose(type, w.generators_[s], w.models_[x]));
      }
    }
    for (Index x = 0; x < n; ++x) {
      Index inv = 0;
      for (auto it = w.words_[x].rbegin(); it != w.words_[x].rend(); ++it)
        inv = w.right_[inv][static_cast<std::size_t>(*it)];
      w.inverse_[x] = inv;
    }

    for (Index x = 0; x < n; ++x)
      for (std::size_t s = 0; s < r; ++s)
        w.reflections_.push_back(w.multiply(w.right_[x][s], w.inverse_[x]));
    std::sort(w.reflections_.begin(), w.reflections_.end());
    w.reflections_.erase(std::unique(w.reflections_.begin(), w.reflections_.end()),
                         w.reflections_.end());

    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (w.product_order(i, j) != type.coxeter_entry(static_cast<int>(i), static_cast<int>(j)))
          throw InvariantViolation("model of " + type.name() + " violates its Coxeter matrix");
    return w;
  }

  const CoxeterType& type() const { return type_; }
  std::size_t rank() const { return generators_.size(); }
  std::size_t order() const { return models_.size(); }
  int coxeter_entry(std::size_t s, std::size_t t) const {
    return type_.coxeter_entry(static_cast<int>(s), static_cast<int>(t));
  }

  Index identity() const { return 0; }
  Index generator(std::size_t s) const { return right_[0][s]; }
  std::size_t length(Index w) const { return lengths_[w]; }
  /// ShortLex-least reduced word, 0-based generator numbers.
  const std::vector<int>& reduced_word(Index w) const { return words_[w]; }
  const GroupModel& model(Index w) const { return models_[w]; }

  /// "e" for the identity, otherwise the reduced word as "s1s2s1".
  std::string label(Index w) const {
    if (words_[w].empty()) return "e";
    std::string out;
    for (int s : words_[w]) out += "s" + std::to_string(s + 1);
    return out;
  }

  Index right_mult(Index w, std::size_t s) const { return right_[w][s]; }
  Index left_mult(std::size_t s, Index w) const { return left_[w][s]; }
  Index inverse(Index w) const { return inverse_[w]; }
  Index multiply(Index a, Index b) const {
    Index out = a;
    for (int s : words_[b]) out = right_[out][static_cast<std::size_t>(s)];
    return out;
  }
  Index find(const GroupModel& g) const {
    auto it = lookup_.find(g);
    if (it == lookup_.end()) throw InvariantViolation("element outside the enumerated group");
    return it->second;
  }
  Index longest_element() const { return models_.size() - 1; }

  /// All conjugates w s w⁻¹, ascending.
  const std::vector<Index>& reflections() const { return reflections_; }

  bool is_right_descent(Index w, std::size_t s) const { return lengths_[right_[w][s]] < lengths_[w]; }
  bool is_left_descent(Index w, std::size_t s) const { return lengths_[left_[w][s]] < lengths_[w]; }

 private:
  void add(GroupModel g, std::vector<int> word, std::size_t length) {
    lookup_.emplace(g, models_.size());
    models_.push_back(std::move(g));
    words_.push_back(std::move(word));
    lengths_.push_back(length);
  }

  int product_order(std::size_t i, std::size_t j) const {
    Index st = multiply(generator(i), generator(j));
    Index x = st;
    int k = 1;
    while (x != identity()) {
      x = multiply(x, st);
      ++k;
    }
    return k;
  }

  CoxeterType type_;
  std::vector<GroupModel> generators_;
  std::vector<GroupModel> models_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> lengths_;
  std::map<GroupModel, Index> lookup_;
  std::vector<std::vector<Index>> right_;
  std::vector<std::vector<Index>> left_;
  std::vector<Index> inverse_;
  std::vector<Index> reflections_;
};

/// Bruhat order with covers v ⋖ w whenever v = wt for a reflection t and
/// ℓ(v) = ℓ(w) − 1. Element i of the poset is group element i, labelled by
/// its reduced word.
inline Poset bruhat_poset(const CoxeterSystem& w) {
  std::vector<std::string> ids;
  ids.reserve(w.order());
  for (Index x = 0; x < w.order(); ++x) ids.push_back(w.label(x));
  std::vector<Cover> covers;
  for (Index x = 0; x < w.order(); ++x) {
    for (Index t : w.reflections()) {
      Index v = w.multiply(x, t);
      if (w.length(v) + 1 == w.length(x)) covers.emplace_back(v, x);
    }
  }
  return Poset::from_index_pairs(std::move(ids), covers, Poset::Input::covers);
}

enum class Side { left, right };

/// A matching on the principal ideal below some element, with the ideal's
/// position inside the parent poset.
struct IdealMatching {
  Poset ideal;
  std::vector<Index> embedding;  // ideal index → parent index
  Matching matching;
};

/// x ↦ xs (right) or x ↦ sx (left) on the Bruhat ideal below w, for a descent
/// s of w on that side.
inline IdealMatching descent_matching(const CoxeterSystem& w, const Poset& bruhat, Index top,
                                      std::size_t s, Side side) {
  if (s >= w.rank()) throw InputError("generator out of range");
  bool descent = side == Side::right ? w.is_right_descent(top, s) : w.is_left_descent(top, s);
  if (!descent)
    throw PreconditionError("s" + std::to_string(s + 1) + " is not a " +
                            (side == Side::right ? "right" : "left") + " descent of " + w.label(top));
  IdealMatching out;
  out.embedding = bruhat.down_set(top);
  out.ideal = bruhat.induced(out.embedding);
  std::vector<Index> position(w.order(), w.order());
  for (Index i = 0; i < out.embedding.size(); ++i) position[out.embedding[i]] = i;
  out.matching.partner.resize(out.embedding.size());
  for (Index i = 0; i < out.embedding.size(); ++i) {
    Index x = out.embedding[i];
    Index image = side == Side::right ? w.right_mult(x, s) : w.left_mult(s, x);
    if (position[image] == w.order())
      throw InvariantViolation("descent multiplication leaves the ideal below " + w.label(top));
    out.matching.partner[i] = position[image];
  }
  return out;
}

/// An involutive permutation of the generators preserving the Coxeter matrix.
struct DiagramAutomorphism {
  std::vector<std::size_t> generator_map;
  bool is_trivial() const {
    for (std::size_t s = 0; s < generator_map.size(); ++s)
      if (generator_map[s] != s) return false;
    return true;
  }
  bool operator==(const DiagramAutomorphism&) const = default;
};

inline DiagramAutomorphism diagram_automorphism(const CoxeterSystem& w,
                                                std::vector<std::size_t> perm) {
  const std::size_t r = w.rank();
  if (perm.size() != r) throw InputError("generator map has the wrong size");
  std::vector<bool> hit(r, false);
  for (std::size_t x : perm) {
    if (x >= r || hit[x]) throw InputError("generator map is not a permutation");
    hit[x] = true;
  }
  for (std::size_t s = 0; s < r; ++s)
    if (perm[perm[s]] != s) throw InputError("generator map is not involutive");
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      if (w.coxeter_entry(perm[s], perm[t]) != w.coxeter_entry(s, t))
        throw InputError("generator map does not preserve the Coxeter matrix");
  return DiagramAutomorphism{std::move(perm)};
}

inline DiagramAutomorphism trivial_automorphism(const CoxeterSystem& w) {
  std::vector<std::size_t> perm(w.rank());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return DiagramAutomorphism{std::move(perm)};
}

/// The preset non-trivial diagram symmetry: reversal for A_n, exchanging the
/// two fork leaves for D_n, exchanging both generators for B_2 and I2(m).
/// A_1 has only the identity, which is returned.
inline DiagramAutomorphism flip_automorphism(const CoxeterSystem& w) {
  const std::size_t r = w.rank();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  switch (w.type().family) {
    case CoxeterFamily::A: std::reverse(perm.begin(), perm.end()); break;
    case CoxeterFamily::B:
      if (r == 1) break;
      if (r != 2) throw InputError(w.type().name() + " has no non-trivial diagram automorphism");
      std::swap(perm[0], perm[1]);
      break;
    case CoxeterFamily::D:
    case CoxeterFamily::I2: std::swap(perm[0], perm[1]); break;
  }
  return diagram_automorphism(w, std::move(perm));
}

/// θ on every group element, by letter-wise action on reduced words, verified
/// to be a bijective homomorphism.
inline std::vector<Index> extend_to_group(const CoxeterSystem& w, const DiagramAutomorphism& theta) {
  std::vector<Index> image(w.order());
  for (Index x = 0; x < w.order(); ++x) {
    Index y = w.identity();
    for (int s : w.reduced_word(x)) y = w.right_mult(y, theta.generator_map[static_cast<std::size_t>(s)]);
    image[x] = y;
  }
  for (Index x = 0; x < w.order(); ++x)
    for (std::size_t s = 0; s < w.rank(); ++s)
      if (image[w.right_mult(x, s)] != w.right_mult(image[x], theta.generator_map[s]))
        throw InvariantViolation("diagram automorphism does not extend to a homomorphism");
  if (!PosetMap{image}.is_bijection())
    throw InvariantViolation("diagram automorphism does not extend to a bijection");
  return image;
}

/// w ↦ θ(w⁻¹) on the Bruhat poset, verified to be an involutive automorphism.
inline PosetMap twisted_map(const CoxeterSystem& w, const Poset& bruhat,
                            const DiagramAutomorphism& theta) {
  auto ext = extend_to_group(w, theta);
  PosetMap f;
  f.image.resize(w.order());
  for (Index x = 0; x < w.order(); ++x) f.image[x] = ext[w.inverse(x)];
  if (!f.after(f).is_identity()) throw InvariantViolation("twisted map is not an involution");
  if (!is_automorphism(bruhat, f)) throw InvariantViolation("twisted map is not a Bruhat automorphism");
  return f;
}

/// {w : θ(w) = w⁻¹}, ascending.
inline std::vector<Index> twisted_involutions(const CoxeterSystem& w, const DiagramAutomorphism& theta) {
  auto ext = extend_to_group(w, theta);
  std::vector<Index> out;
  for (Index x = 0; x < w.order(); ++x)
    if (ext[x] == w.inverse(x)) out.push_back(x);
  return out;
}

/// Bruhat order restricted to {w : θ(w) = w}.
inline Poset fix_subgroup_poset(const CoxeterSystem& w, const Poset& bruhat,
                                const DiagramAutomorphism& theta) {
  auto ext = extend_to_group(w, theta);
  std::vector<Index> fixed;
  for (Index x = 0; x < w.order(); ++x)
    if (ext[x] == x) fixed.push_back(x);
  return bruhat.induced(std::move(fixed));
}

}  // namespace zircon
