#include "unitwreath/pcgroup.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "test_support.hpp"
#include "unitwreath/errors.hpp"

namespace unitwreath {
namespace {

using namespace unitwreath::testing;

// D8 x C2 as (rotation k mod 4, flip e, central bit z) with
// r^k1 f^e1 * r^k2 f^e2 = r^(k1 + (-1)^e1 k2) f^(e1 + e2).
struct DihedralModel {
  int k, e, z;
  friend auto operator<=>(const DihedralModel&, const DihedralModel&) = default;
};

DihedralModel model_mul(DihedralModel x, DihedralModel y) {
  const int k = ((x.k + (x.e ? -y.k : y.k)) % 4 + 4) % 4;
  return {k, x.e ^ y.e, x.z ^ y.z};
}

// a -> r, c -> r^2, b -> f, z -> z
DihedralModel model_of(const FiniteGroup& g, GroupElement x) {
  const auto e = g.exponents(x);
  return {(e[0] + 2 * e[1]) % 4, e[2], e[3]};
}

TEST(PcGroupLoad, SingleGeneratorIsC2) {
  const auto g = load("group C2\ngens t\n");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.element_order(g.generator(0)), 2u);
}

TEST(PcGroupLoad, D8xC2HasOrder16) {
  const auto g = load(kD8xC2);
  EXPECT_EQ(g.order(), 16u);
  EXPECT_EQ(g.name(), "D8xC2");
  ASSERT_NE(g.cayley(), nullptr);
}

TEST(PcGroupLoad, CollectionMatchesIndependentDihedralModel) {
  const auto g = load(kD8xC2);
  std::set<DihedralModel> image;
  for (const auto& x : g.elements()) {
    image.insert(model_of(g, x));
    for (const auto& y : g.elements())
      EXPECT_EQ(model_of(g, g.collect(x, y)), model_mul(model_of(g, x), model_of(g, y)));
  }
  EXPECT_EQ(image.size(), 16u);
}

TEST(PcGroupLoad, ConjugationWordWithEarlierGeneratorIsConstraintError) {
  EXPECT_THROW(load("group bad\ngens a b c\nconj c b = c a\n"), ConstraintError);
  EXPECT_THROW(load("group bad\ngens a b c\nconj c b = c b\n"), ConstraintError);
}

TEST(PcGroupLoad, PowerWordWithEarlierGeneratorIsConstraintError) {
  EXPECT_THROW(load("group bad\ngens a b\npow b = a\n"), ConstraintError);
  EXPECT_THROW(load("group bad\ngens a b\npow a = a\n"), ConstraintError);
}

TEST(PcGroupLoad, ConjugationMustNameLaterGeneratorFirst) {
  EXPECT_THROW(load("group bad\ngens a b\nconj a b = a\n"), ConstraintError);
}

TEST(PcGroupLoad, ParseErrors) {
  EXPECT_THROW(load("gens a b\n"), ParseError);
  EXPECT_THROW(load("group g\n"), ParseError);
  EXPECT_THROW(load("group g\npow a = 1\ngens a\n"), ParseError);
  EXPECT_THROW(load("group g\ngens a b\npow a = q\n"), ParseError);
  EXPECT_THROW(load("group g\ngens a b\npow a b\n"), ParseError);
  EXPECT_THROW(load("group g\ngens a b\npow a = 1 b\n"), ParseError);
  EXPECT_THROW(load("group g\ngens a b\npow a = b\npow a = b\n"), ParseError);
  EXPECT_THROW(load("group g\ngens a a\n"), ParseError);
  EXPECT_THROW(load("group g\ngens a\nfoo a\n"), ParseError);
  try {
    load("group g\n# comment\ngens a b\nconj b a = x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(PcGroupLoad, CommentsAndIdentityWord) {
  const auto g = load("# D8\ngroup D8  # dihedral\ngens a c b\npow a = c\npow b = 1\nconj b a = b c # b^a\n");
  EXPECT_EQ(g.order(), 8u);
}

TEST(PcGroupLoad, InconsistentPresentationIsRejected) {
  // a acts nontrivially on its own square.
  EXPECT_THROW(load("group bad\ngens a b c\npow a = b\nconj b a = b c\n"), InconsistencyError);
}

TEST(PcGroupLoad, TooManyGeneratorsIsRejected) {
  std::string text = "group big\ngens";
  for (int i = 0; i <= FiniteGroup::kMaxGenerators; ++i) text += " g" + std::to_string(i);
  EXPECT_THROW(load(text), ConstraintError);
}

TEST(PcGroupOps, Multiply) {
  const auto g = load(kD8xC2);
  const auto a = word(g, "a"), b = word(g, "b"), c = word(g, "c");
  for (const auto& x : g.elements()) EXPECT_EQ(g.multiply(x, g.identity()), x);
  EXPECT_EQ(g.multiply(a, a), c);
  EXPECT_NE(g.multiply(b, a), g.multiply(a, b));
  // brute force: D8xC2 is non-abelian
  EXPECT_FALSE(g.cayley()->is_abelian());
}

TEST(PcGroupOps, Commutator) {
  const auto g = load(kD8xC2);
  const auto a = word(g, "a"), b = word(g, "b"), c = word(g, "c"), z = word(g, "z");
  for (const auto& x : g.elements()) {
    EXPECT_EQ(g.commutator(x, g.identity()), g.identity());
    EXPECT_EQ(g.commutator(z, x), g.identity());
    for (const auto& y : g.elements()) EXPECT_EQ(g.commutator(x, y), brute_commutator(g, x, y));
  }
  EXPECT_EQ(g.commutator(b, a), c);
}

TEST(PcGroupOps, ElementOrder) {
  const auto g = load(kD8xC2);
  EXPECT_EQ(g.element_order(g.identity()), 1u);
  EXPECT_EQ(g.element_order(word(g, "a")), 4u);
  EXPECT_EQ(g.element_order(word(g, "z")), 2u);
  for (const auto& x : g.elements()) EXPECT_EQ(g.element_order(x), brute_order(g, x));
}

TEST(PcGroupOps, DerivedSubgroup) {
  const auto abelian = load(kC2xC2);
  EXPECT_EQ(derived_subgroup(abelian).size(), 1u);
  const auto g = load(kD8xC2);
  const auto d = derived_subgroup(g);
  EXPECT_EQ(d.elements, (std::vector<std::uint32_t>{0, word(g, "c").bits}));
  EXPECT_EQ(d.size(), brute_derived(g).size());
  const auto d8 = load(kD8);
  EXPECT_EQ(derived_subgroup(d8).size(), 2u);
  EXPECT_EQ(brute_derived(d8).size(), 2u);
}

TEST(PcGroupOps, Center) {
  const auto abelian = load(kC2xC2);
  EXPECT_EQ(center(abelian).size(), 4u);
  const auto d8 = load(kD8);
  EXPECT_EQ(center(d8).size(), 2u);
  EXPECT_EQ(brute_center(d8).size(), 2u);
  const auto g = load(kD8xC2);
  const auto z = center(g);
  const auto c = word(g, "c"), zz = word(g, "z");
  std::vector<std::uint32_t> expected{0, c.bits, zz.bits, g.multiply(c, zz).bits};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(z.elements, expected);
}

TEST(PcGroupOps, SubgroupClosure) {
  const auto g = load(kD8xC2);
  EXPECT_EQ(subgroup_closure(g, {}).elements, std::vector<std::uint32_t>{0});
  const GroupElement a[] = {word(g, "a")};
  EXPECT_EQ(subgroup_closure(g, a).size(), 4u);
  const GroupElement ab[] = {word(g, "a"), word(g, "b")};
  EXPECT_EQ(subgroup_closure(g, ab).size(), 8u);
}

TEST(PcGroupOps, IsCyclic) {
  const auto g = load(kD8xC2);
  EXPECT_TRUE(is_cyclic(g, subgroup_closure(g, {})));
  const GroupElement c[] = {word(g, "c")};
  EXPECT_EQ(cyclic_generator(g, subgroup_closure(g, c)), word(g, "c"));
  const GroupElement klein[] = {word(g, "c"), word(g, "z")};
  const auto k = subgroup_closure(g, klein);
  EXPECT_EQ(k.size(), 4u);
  EXPECT_FALSE(is_cyclic(g, k));
}

TEST(PcGroupOps, FormatAndParseWords) {
  const auto g = load(kD8xC2);
  EXPECT_EQ(g.format(g.identity()), "1");
  const auto x = g.multiply(word(g, "c"), word(g, "b"));
  EXPECT_EQ(g.format(x), "c·b");
  EXPECT_EQ(g.parse_word("c·b"), x);
  EXPECT_EQ(g.parse_word("b a a"), g.multiply(word(g, "b"), word(g, "c")));
  EXPECT_EQ(g.parse_word("1"), g.identity());
  EXPECT_FALSE(g.parse_word("q").has_value());
}

TEST(PcGroupOps, TextRoundTrip) {
  const auto p = parse_presentation(kD8xC2);
  EXPECT_EQ(to_text(p), kD8xC2);
  EXPECT_EQ(parse_presentation(to_text(p)), p);
}

// ---------------------------------------------------------------------------
// Properties over every bundled group.

class CorpusGroups : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { groups_ = new std::vector<FiniteGroup>(corpus_groups()); }
  static void TearDownTestSuite() { delete groups_; }
  static std::vector<FiniteGroup>* groups_;
};
std::vector<FiniteGroup>* CorpusGroups::groups_ = nullptr;

TEST_F(CorpusGroups, CorpusIsComplete) { EXPECT_EQ(groups_->size(), 5u + 14u + 51u); }

TEST_F(CorpusGroups, AssociativityIsExhaustive) {
  for (const auto& g : *groups_) {
    ASSERT_LE(g.order(), 64u);
    for (const auto& x : g.elements())
      for (const auto& y : g.elements())
        for (const auto& w : g.elements())
          ASSERT_EQ(g.multiply(g.multiply(x, y), w), g.multiply(x, g.multiply(y, w))) << g.name();
  }
}

TEST_F(CorpusGroups, InverseAndLagrange) {
  for (const auto& g : *groups_)
    for (const auto& x : g.elements()) {
      EXPECT_EQ(g.multiply(x, g.inverse(x)), g.identity());
      EXPECT_EQ(g.multiply(g.inverse(x), x), g.identity());
      EXPECT_EQ(g.order() % g.element_order(x), 0u);
    }
}

TEST_F(CorpusGroups, CayleyTableMatchesCollection) {
  for (const auto& g : *groups_) {
    ASSERT_NE(g.cayley(), nullptr);
    for (const auto& x : g.elements())
      for (const auto& y : g.elements()) ASSERT_EQ((*g.cayley())(x.bits, y.bits), g.collect(x, y).bits);
  }
}

TEST_F(CorpusGroups, DerivedAndCenterMatchBruteForceAndAreNormal) {
  for (const auto& g : *groups_) {
    const auto d = derived_subgroup(g);
    const auto z = center(g);
    const auto bd = brute_derived(g);
    const auto bz = brute_center(g);
    EXPECT_EQ(std::vector<std::uint32_t>(bd.begin(), bd.end()), d.elements) << g.name();
    EXPECT_EQ(std::vector<std::uint32_t>(bz.begin(), bz.end()), z.elements) << g.name();
    for (const auto* s : {&d, &z}) {
      EXPECT_EQ(brute_closure(g, {s->elements.begin(), s->elements.end()}).size(), s->size());
      for (auto idx : s->elements)
        for (const auto& x : g.elements()) EXPECT_TRUE(s->contains(g.conjugate(g.element(idx), x)));
    }
  }
}

TEST_F(CorpusGroups, ConjugateIsElementTimesCommutator) {
  for (const auto& g : *groups_)
    for (const auto& b : g.elements())
      for (const auto& a : g.elements()) {
        GroupElement ai = g.identity();
        for (std::uint32_t i = 0; i <= g.element_order(a); ++i) {
          ASSERT_EQ(g.conjugate(b, ai), g.multiply(b, g.commutator(b, ai)));
          ai = g.multiply(ai, a);
        }
      }
}

TEST_F(CorpusGroups, PresentationTextRoundTrip) {
  for (const auto& g : *groups_) {
    const auto again = load(to_text(g.presentation()));
    EXPECT_EQ(again.presentation(), g.presentation());
    EXPECT_EQ(again.cayley()->data(), g.cayley()->data());
  }
}

TEST(PcGroupLarge, NoCayleyTableAboveLimit) {
  // C2^10, order 1024: collection only.
  const auto g = load("group E1024\ngens a b c d e f h i j k\n");
  EXPECT_EQ(g.order(), 1024u);
  EXPECT_EQ(g.cayley(), nullptr);
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto x = g.element(rng() % 1024), y = g.element(rng() % 1024);
    EXPECT_EQ(g.multiply(x, y).bits, x.bits ^ y.bits);
  }
}

}  // namespace
}  // namespace unitwreath
