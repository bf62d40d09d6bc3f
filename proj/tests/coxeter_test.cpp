#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zircon/coxeter.hpp"
#include "zircon/fixed_points.hpp"
#include "zircon/mobius.hpp"
#include "zircon/zircon_property.hpp"

namespace zircon {
namespace {

CoxeterSystem group(const char* spec) { return CoxeterSystem::build(CoxeterType::parse(spec)); }

std::size_t max_length(const CoxeterSystem& w) {
  std::size_t best = 0;
  for (Index x = 0; x < w.order(); ++x) best = std::max(best, w.length(x));
  return best;
}

// Cayley-graph BFS from the identity over right multiplication, computed from
// the concrete models alone.
std::vector<std::size_t> bfs_lengths(const CoxeterSystem& w) {
  std::vector<std::size_t> dist(w.order(), w.order());
  std::vector<Index> queue{w.identity()};
  dist[w.identity()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index x = queue[head];
    for (std::size_t s = 0; s < w.rank(); ++s) {
      Index y = w.find(detail::model_compose(w.type(), w.model(x), w.model(w.generator(s))));
      if (dist[y] == w.order()) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

TEST(CoxeterType, Parse) {
  EXPECT_EQ(CoxeterType::parse("A3").name(), "A3");
  EXPECT_EQ(CoxeterType::parse("I2:7").m, 7);
  EXPECT_EQ(CoxeterType::parse("D4").rank, 4);
  EXPECT_THROW(CoxeterType::parse("E8"), InputError);
  EXPECT_THROW(CoxeterType::parse("A"), InputError);
  EXPECT_THROW(CoxeterType::parse("A0"), InputError);
  EXPECT_THROW(CoxeterType::parse("I2:1"), InputError);
  EXPECT_THROW(CoxeterType::parse("B2x"), InputError);
}

TEST(BuildCoxeter, Examples) {
  auto a2 = group("A2");
  EXPECT_EQ(a2.order(), 6U);
  EXPECT_EQ(max_length(a2), 3U);
  auto b2 = group("B2");
  EXPECT_EQ(b2.order(), 8U);
  EXPECT_EQ(max_length(b2), 4U);
  auto i25 = group("I2:5");
  EXPECT_EQ(i25.order(), 10U);
  EXPECT_EQ(max_length(i25), 5U);
  EXPECT_EQ(group("A3").order(), 24U);
  EXPECT_EQ(group("B3").order(), 48U);
  EXPECT_EQ(group("D4").order(), 192U);
  EXPECT_EQ(group("D3").order(), 24U);
  EXPECT_THROW(CoxeterSystem::build(CoxeterType::parse("A8")), PreconditionError);
  EXPECT_NO_THROW(CoxeterSystem::build(CoxeterType::parse("A4"), 120));
}

TEST(BuildCoxeter, TableInvariants) {
  for (const char* spec : {"A1", "A3", "B2", "B3", "D4", "I2:2", "I2:6"}) {
    auto w = group(spec);
    auto dist = bfs_lengths(w);
    for (Index x = 0; x < w.order(); ++x) {
      EXPECT_EQ(w.length(x), dist[x]) << spec;
      EXPECT_EQ(w.reduced_word(x).size(), w.length(x));
      Index product = w.identity();
      for (int s : w.reduced_word(x)) product = w.right_mult(product, static_cast<std::size_t>(s));
      EXPECT_EQ(product, x);
      EXPECT_EQ(w.multiply(x, w.inverse(x)), w.identity());
      for (std::size_t s = 0; s < w.rank(); ++s)
        for (std::size_t t = 0; t < w.rank(); ++t)
          EXPECT_EQ(w.left_mult(s, w.right_mult(x, t)), w.right_mult(w.left_mult(s, x), t));
    }
    for (std::size_t s = 0; s < w.rank(); ++s) {
      EXPECT_EQ(w.coxeter_entry(s, s), 1);
      for (std::size_t t = 0; t < w.rank(); ++t) EXPECT_EQ(w.coxeter_entry(s, t), w.coxeter_entry(t, s));
    }
    for (Index t : w.reflections()) EXPECT_EQ(w.multiply(t, t), w.identity());
    // ShortLex numbering: lengths are non-decreasing along the table.
    for (Index x = 1; x < w.order(); ++x) EXPECT_LE(w.length(x - 1), w.length(x));
  }
  EXPECT_EQ(group("A3").reflections().size(), 6U);
  EXPECT_EQ(group("B3").reflections().size(), 9U);
  EXPECT_EQ(group("I2:7").reflections().size(), 7U);
}

TEST(BruhatPoset, Examples) {
  auto hex = bruhat_poset(group("A2"));
  EXPECT_EQ(hex.size(), 6U);
  EXPECT_EQ(hex.covers().size(), 8U);
  EXPECT_EQ(hex.ids(), (std::vector<std::string>{"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"}));

  auto a1 = bruhat_poset(group("A1"));
  EXPECT_EQ(a1.ids(), (std::vector<std::string>{"e", "s1"}));
  EXPECT_EQ(a1.covers(), (std::vector<Cover>{{0, 1}}));

  auto b2 = bruhat_poset(group("B2"));
  auto rank = rank_function(b2);
  ASSERT_TRUE(rank);
  std::vector<int> level_sizes(5, 0);
  for (int r : *rank) ++level_sizes[static_cast<std::size_t>(r)];
  EXPECT_EQ(level_sizes, (std::vector<int>{1, 2, 2, 2, 1}));
}

TEST(BruhatPoset, GradedByLength) {
  for (const char* spec : {"A3", "B3", "D4", "I2:8"}) {
    auto w = group(spec);
    auto rank = rank_function(bruhat_poset(w));
    ASSERT_TRUE(rank) << spec;
    for (Index x = 0; x < w.order(); ++x) EXPECT_EQ(static_cast<std::size_t>((*rank)[x]), w.length(x));
  }
}

// Subword property as an independent check of the reflection-cover order on A3:
// u <= w iff some reduced word of w contains a reduced word of u as a subword.
TEST(BruhatPoset, AgreesWithSubwordProperty) {
  auto w = group("A3");
  auto b = bruhat_poset(w);
  for (Index x = 0; x < w.order(); ++x) {
    const auto& word = w.reduced_word(x);
    std::set<Index> below;
    for (std::uint32_t mask = 0; mask < (1U << word.size()); ++mask) {
      Index product = w.identity();
      for (std::size_t i = 0; i < word.size(); ++i)
        if (mask >> i & 1U) product = w.right_mult(product, static_cast<std::size_t>(word[i]));
      below.insert(product);
    }
    for (Index u = 0; u < w.order(); ++u) EXPECT_EQ(b.leq(u, x), below.contains(u));
  }
}

TEST(DescentMatching, Examples) {
  auto a2 = group("A2");
  auto hex = bruhat_poset(a2);
  auto dm = descent_matching(a2, hex, a2.longest_element(), 0, Side::right);
  auto expected = mapping_from_pairs(hex, {{"e", "s1"}, {"s2", "s2s1"}, {"s1s2", "s1s2s1"}});
  EXPECT_EQ(dm.matching.partner, expected);
  EXPECT_TRUE(is_special(dm.ideal, dm.matching));

  auto a1 = group("A1");
  auto a1p = bruhat_poset(a1);
  auto m1 = descent_matching(a1, a1p, 1, 0, Side::right);
  EXPECT_EQ(m1.matching.partner, (std::vector<Index>{1, 0}));

  auto b2 = group("B2");
  auto b2p = bruhat_poset(b2);
  std::size_t count = 0;
  for (std::size_t s = 0; s < 2; ++s)
    for (Side side : {Side::left, Side::right}) {
      auto m = descent_matching(b2, b2p, b2.longest_element(), s, side);
      EXPECT_TRUE(is_special(m.ideal, m.matching));
      ++count;
    }
  EXPECT_EQ(count, 4U);

  EXPECT_THROW(descent_matching(a2, hex, hex.index("s1"), 1, Side::right), PreconditionError);
}

TEST(DiagramAutomorphism, Examples) {
  auto a3 = group("A3");
  EXPECT_TRUE(diagram_automorphism(a3, {0, 1, 2}).is_trivial());
  EXPECT_EQ(flip_automorphism(a3).generator_map, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_NO_THROW(diagram_automorphism(a3, {2, 1, 0}));
  EXPECT_THROW(diagram_automorphism(a3, {1, 0, 2}), InputError);  // m(s1,s3)=2 but m(s2,s3)=3
  EXPECT_THROW(diagram_automorphism(a3, {1, 2, 0}), InputError);  // not involutive
  EXPECT_THROW(diagram_automorphism(a3, {0, 0, 2}), InputError);

  auto b2 = group("B2");
  EXPECT_NO_THROW(diagram_automorphism(b2, {1, 0}));
  auto b3 = group("B3");
  EXPECT_THROW(diagram_automorphism(b3, {2, 1, 0}), InputError);
  EXPECT_THROW(flip_automorphism(b3), InputError);
  EXPECT_EQ(flip_automorphism(group("D4")).generator_map, (std::vector<std::size_t>{1, 0, 2, 3}));
}

TEST(TwistedMap, Examples) {
  auto a2 = group("A2");
  auto hex = bruhat_poset(a2);
  auto f = twisted_map(a2, hex, trivial_automorphism(a2));
  for (Index x = 0; x < a2.order(); ++x) EXPECT_EQ(f(x), a2.inverse(x));
  std::vector<std::string> fixed;
  for (Index x : f.fixed_points()) fixed.push_back(hex.id(x));
  EXPECT_EQ(fixed, (std::vector<std::string>{"e", "s1", "s2", "s1s2s1"}));
  EXPECT_TRUE(f.after(f).is_identity());

  auto a3 = group("A3");
  auto a3p = bruhat_poset(a3);
  auto g = twisted_map(a3, a3p, flip_automorphism(a3));
  EXPECT_EQ(g(a3.identity()), a3.identity());
  EXPECT_EQ(g(a3.longest_element()), a3.longest_element());
  EXPECT_TRUE(g.after(g).is_identity());
  EXPECT_TRUE(is_automorphism(a3p, g));
}

TEST(TwistedInvolutions, Examples) {
  auto a2 = group("A2");
  EXPECT_EQ(twisted_involutions(a2, trivial_automorphism(a2)).size(), 4U);
  auto a3 = group("A3");
  auto inv = twisted_involutions(a3, trivial_automorphism(a3));
  EXPECT_EQ(inv.size(), 10U);
  // w² = e filter on the permutation model.
  std::size_t squares = 0;
  for (Index x = 0; x < a3.order(); ++x)
    if (detail::model_compose(a3.type(), a3.model(x), a3.model(x)) == a3.model(a3.identity())) ++squares;
  EXPECT_EQ(squares, 10U);
  for (const char* spec : {"A3", "B3", "I2:5"}) {
    auto w = group(spec);
    auto set = twisted_involutions(w, trivial_automorphism(w));
    EXPECT_TRUE(std::binary_search(set.begin(), set.end(), w.identity()));
    for (std::size_t s = 0; s < w.rank(); ++s)
      EXPECT_TRUE(std::binary_search(set.begin(), set.end(), w.generator(s)));
  }
}

TEST(FixSubgroupPoset, Examples) {
  auto a3 = group("A3");
  auto a3p = bruhat_poset(a3);
  EXPECT_EQ(fix_subgroup_poset(a3, a3p, trivial_automorphism(a3)), a3p);
  auto fix = fix_subgroup_poset(a3, a3p, flip_automorphism(a3));
  EXPECT_EQ(fix.size(), 8U);
  EXPECT_TRUE(are_isomorphic(fix, bruhat_poset(group("B2"))));
}

TEST(CoxeterProperties, DescentMatchingsSpecialAndZircon) {
  for (const char* spec : {"A2", "A3", "B2", "B3", "I2:3", "I2:4", "I2:5", "I2:6", "I2:7", "I2:8"}) {
    auto w = group(spec);
    auto b = bruhat_poset(w);
    EXPECT_TRUE(is_zircon(b)) << spec;
    for (Index x = 1; x < w.order(); ++x)
      for (std::size_t s = 0; s < w.rank(); ++s)
        for (Side side : {Side::left, Side::right}) {
          bool descent = side == Side::left ? w.is_left_descent(x, s) : w.is_right_descent(x, s);
          if (!descent) continue;
          auto m = descent_matching(w, b, x, s, side);
          EXPECT_TRUE(is_special(m.ideal, m.matching)) << spec << " " << w.label(x);
        }
  }
}

TEST(CoxeterProperties, TwistedInvolutionPosets) {
  struct Case { const char* spec; bool flip; };
  for (auto c : {Case{"A2", false}, Case{"A3", false}, Case{"A3", true}, Case{"B2", false},
                 Case{"B3", false}, Case{"D4", true}, Case{"I2:6", true}}) {
    auto w = group(c.spec);
    auto b = bruhat_poset(w);
    auto theta = c.flip ? flip_automorphism(w) : trivial_automorphism(w);
    auto inv = twisted_involutions(w, theta);
    auto f = twisted_map(w, b, theta);
    EXPECT_EQ(inv, f.fixed_points()) << c.spec;
    auto sub = b.induced(inv);
    EXPECT_EQ(sub, fixed_point_subposet(b, f));
    EXPECT_TRUE(is_zircon(sub)) << c.spec;
    auto rank = rank_function(sub);
    ASSERT_TRUE(rank);
    for (Index x = 0; x < sub.size(); ++x) {
      auto column = mobius_column(sub, x);
      for (Index y : sub.up_set(x)) EXPECT_EQ(column[y], ((*rank)[y] - (*rank)[x]) % 2 == 0 ? 1 : -1);
    }
  }
}

}  // namespace
}  // namespace zircon
