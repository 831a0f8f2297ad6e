#include "unitwreath/construct.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "unitwreath/errors.hpp"
#include "unitwreath/report.hpp"

namespace unitwreath {
namespace {

using namespace unitwreath::testing;

const Check* find_check(const std::vector<Check>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(CheckHypotheses, Abelian) {
  const auto r = check_hypotheses(load(kC2xC2));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failure, HypothesisFailure::abelian);
}

TEST(CheckHypotheses, D8HasCenterEqualToDerived) {
  const auto r = check_hypotheses(load(kD8));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failure, HypothesisFailure::no_central_involution_outside_derived);
  EXPECT_EQ(r.center_order, 2u);
  EXPECT_EQ(r.derived_order, 2u);
}

TEST(CheckHypotheses, D8xC2Passes) {
  const auto g = load(kD8xC2);
  const auto r = check_hypotheses(g);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.derived_order, 2u);
  EXPECT_TRUE(r.derived_cyclic);
  EXPECT_EQ(r.center_order, 4u);
  // z and c·z are central involutions outside G' = {1, c}
  EXPECT_EQ(r.candidates_z, (std::vector<GroupElement>{word(g, "z"), word(g, "c z")}));
}

TEST(CheckHypotheses, DerivedNotCyclic) {
  // C2^2 wr C2 style: the group of order 32 with G' = C2 x C2 exists in the corpus.
  std::size_t seen = 0;
  for (const auto& path : corpus_files(corpus_dir() / "o32")) {
    const auto g = load_file(path);
    const auto r = check_hypotheses(g);
    if (r.failure == HypothesisFailure::derived_not_cyclic) {
      ++seen;
      EXPECT_FALSE(is_cyclic(g, derived_subgroup(g)));
    }
    EXPECT_EQ(r.pass, r.nonabelian && r.derived_cyclic && !r.candidates_z.empty());
  }
  EXPECT_GT(seen, 0u);
}

TEST(SelectWitness, D8xC2) {
  const auto g = load(kD8xC2);
  const auto w = select_witness(g, check_hypotheses(g));
  EXPECT_EQ(w.s, 1);
  EXPECT_EQ(w.k, 2);
  EXPECT_EQ(g.commutator(w.b, w.a), word(g, "c"));
  EXPECT_EQ(w.z, word(g, "z"));
  EXPECT_EQ(g.commutator(w.b, g.power(w.a, 2)), g.identity());
  EXPECT_EQ(w.a, word(g, "a"));
  EXPECT_EQ(w.b, word(g, "b"));
}

TEST(SelectWitness, AcceptedWitnessesSatisfyInvariants) {
  for (const auto& path : corpus_files(corpus_dir())) {
    const auto g = load_file(path);
    const auto r = check_hypotheses(g);
    if (!r.pass) continue;
    const auto w = select_witness(g, r);
    EXPECT_FALSE(witness_violation(g, r, w).has_value()) << g.name();
    std::set<GroupElement> comms;
    for (std::uint64_t i = 0; i < (1u << w.s); ++i) comms.insert(g.commutator(w.b, g.power(w.a, i)));
    EXPECT_EQ(comms.size(), std::size_t{1} << w.s);
    // (b,a) generates G'
    const GroupElement c[] = {g.commutator(w.b, w.a)};
    EXPECT_EQ(subgroup_closure(g, c).elements, derived_subgroup(g).elements);
  }
}

TEST(SelectWitness, FailingGroupIsContractError) {
  const auto g = load(kD8);
  EXPECT_THROW(select_witness(g, check_hypotheses(g)), ContractError);
  EXPECT_THROW(run_construction(g), ContractError);
}

TEST(SelectWitness, Overrides) {
  const auto g = load(kD8xC2);
  const auto r = check_hypotheses(g);
  WitnessConstraints fixed;
  fixed.z = word(g, "c z");
  EXPECT_EQ(select_witness(g, r, fixed).z, word(g, "c z"));

  fixed = {};
  fixed.a = word(g, "a b");
  const auto w = select_witness(g, r, fixed);
  EXPECT_EQ(w.a, word(g, "a b"));
  EXPECT_FALSE(witness_violation(g, r, w).has_value());

  fixed = {};
  fixed.z = word(g, "c");
  EXPECT_THROW(select_witness(g, r, fixed), NoWitnessError);
  fixed = {};
  fixed.b = g.identity();
  try {
    select_witness(g, r, fixed);
    FAIL();
  } catch (const NoWitnessError& e) {
    EXPECT_NE(std::string(e.what()).find("scanned 16 pairs"), std::string::npos);
  }
}

TEST(SelectWitness, ViolationsAreNamed) {
  const auto g = load(kD8xC2);
  const auto r = check_hypotheses(g);
  Witness w{word(g, "a"), word(g, "z"), word(g, "z"), 1, 2};
  EXPECT_TRUE(witness_violation(g, r, w).has_value());
  w = Witness{word(g, "a"), word(g, "b"), word(g, "c"), 1, 2};
  EXPECT_NE(witness_violation(g, r, w)->find("central involution"), std::string::npos);
  w = Witness{word(g, "a"), word(g, "b"), word(g, "z"), 1, 1};
  EXPECT_NE(witness_violation(g, r, w)->find("k"), std::string::npos);
}

class D8xC2Construction : public ::testing::Test {
 protected:
  D8xC2Construction()
      : g(load(kD8xC2)), w(select_witness(g, check_hypotheses(g))), orbit(build_orbit(g, w)),
        base(verify_base_group(orbit)) {}
  FiniteGroup g;
  Witness w;
  BaseOrbit orbit;
  BaseGroup base;
};

TEST_F(D8xC2Construction, Orbit) {
  ASSERT_EQ(orbit.units.size(), 2u);
  const auto b = word(g, "b"), bc = word(g, "c b"), z = word(g, "z");
  const GroupElement h0[] = {g.identity(), b, g.multiply(b, z)};
  const GroupElement h1[] = {g.identity(), bc, g.multiply(bc, z)};
  EXPECT_EQ(orbit.units[0].value(), AlgebraElement::from_support(g, h0));
  EXPECT_EQ(orbit.units[1].value(), AlgebraElement::from_support(g, h1));
  for (const auto& u : orbit.units) {
    EXPECT_EQ(u.support().count(), 3u);
    EXPECT_EQ(augmentation(u.value()), 1);
  }
  EXPECT_EQ(conjugate_unit(orbit.units.back(), w.a), orbit.units.front());
}

TEST_F(D8xC2Construction, BaseGroup) {
  EXPECT_EQ(base.order(), 4u);
  const auto closure = bfs_closure(orbit.units);
  EXPECT_EQ(closure.size(), 4u);
  EXPECT_EQ(base.elements[3], orbit.units[0] * orbit.units[1]);
  // product of all members: 1 + b (sum of (b, a^i)) (1 + z)
  const auto one = AlgebraElement::one(g);
  AlgebraElement sum = AlgebraElement::zero(g);
  for (std::uint64_t i = 0; i < 2; ++i) sum = sum + AlgebraElement::embed(g, g.commutator(w.b, g.power(w.a, i)));
  const auto expected = one + AlgebraElement::embed(g, w.b) * sum * (one + AlgebraElement::embed(g, w.z));
  EXPECT_EQ(base.elements.back().value(), expected);
  EXPECT_FALSE(base.elements.back().is_one());
  EXPECT_TRUE(base.elements[0].is_one());
}

TEST_F(D8xC2Construction, Section) {
  SectionOptions options;
  options.oracle = true;
  const auto r = build_section(g, w, orbit, base, options);
  EXPECT_EQ(r.ambient_order, 16u);
  EXPECT_EQ(r.kernel_order, 2u);
  EXPECT_EQ(r.quotient_order, 8u);
  EXPECT_TRUE(r.verdict);
  for (const char* name : {"orbit-closed-form", "orbit-orders", "pairwise-commuting", "subset-products-nontrivial",
                           "kernel-central", "quotient-order", "base-normal-elem-abelian", "top-order",
                           "regular-shift-action", "complement-trivial-intersection", "oracle-isomorphism",
                           "quotient-well-defined", "section-orders", "oracle-base-closure"}) {
    const auto* c = find_check(r.checks, name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->status, Check::Status::passed) << name;
  }
}

TEST_F(D8xC2Construction, KernelCentralizesBase) {
  const auto top = NormalizedUnit::embed(g, g.power(w.a, 2));
  for (const auto& x : base.elements) {
    EXPECT_EQ(x * top, top * x);
    EXPECT_EQ(conjugate_unit(x, g.power(w.a, 2)), x);
  }
}

class D8xC2Quotient : public D8xC2Construction {
 protected:
  D8xC2Quotient() {
    auto seeds = orbit.units;
    seeds.push_back(NormalizedUnit::embed(g, w.a));
    ambient = bfs_closure(seeds);
    const NormalizedUnit k[] = {NormalizedUnit::embed(g, g.power(w.a, 2))};
    kernel = bfs_closure(k);
  }
  std::vector<NormalizedUnit> ambient, kernel;
};

TEST_F(D8xC2Quotient, StructureAndShift) {
  const auto q = build_quotient(ambient, kernel);
  ASSERT_EQ(q.order(), 8u);
  EXPECT_TRUE(q.representative(0).is_one());
  const std::vector<std::size_t> images{*q.locate(orbit.units[0]), *q.locate(orbit.units[1])};
  const auto top = *q.locate(NormalizedUnit::embed(g, w.a));
  // a-bar swaps the two orbit images
  EXPECT_EQ(q.multiply(q.multiply(*q.locate(NormalizedUnit::embed(g, g.power(w.a, 3))), images[0]), top), images[1]);
  EXPECT_EQ(q.multiply(q.multiply(*q.locate(NormalizedUnit::embed(g, g.power(w.a, 3))), images[1]), top), images[0]);
  EXPECT_FALSE(q.table().is_abelian());
  EXPECT_TRUE(all_passed(verify_wreath(q, images, top, 1, true)));
  // the complement: X-bar and <a-bar> meet trivially
  for (std::size_t i = 1; i < base.order(); ++i) {
    const auto xi = *q.locate(base.elements[i]);
    EXPECT_NE(xi, top);
    EXPECT_NE(xi, 0u);
  }
}

TEST_F(D8xC2Quotient, RepresentativeIndependence) {
  const auto q = build_quotient(ambient, kernel);
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto& cx = q.cosets()[rng() % q.order()];
    const auto& cy = q.cosets()[rng() % q.order()];
    const auto p1 = q.locate(cx[rng() % cx.size()] * cy[rng() % cy.size()]);
    const auto p2 = q.locate(cx.front() * cy.front());
    ASSERT_TRUE(p1 && p2);
    EXPECT_EQ(*p1, *p2);
  }
}

TEST_F(D8xC2Quotient, DroppedCosetFails) {
  const auto q = build_quotient(ambient, kernel);
  auto cosets = q.cosets();
  cosets.pop_back();
  const QuotientGroup broken(g, cosets);
  const std::vector<std::size_t> images{*broken.locate(orbit.units[0]), *broken.locate(orbit.units[1])};
  const auto checks = verify_wreath(broken, images, *broken.locate(NormalizedUnit::embed(g, w.a)), 1, true);
  EXPECT_FALSE(all_passed(checks));
  EXPECT_EQ(find_check(checks, "quotient-order")->status, Check::Status::failed);
  EXPECT_EQ(find_check(checks, "quotient-well-defined")->status, Check::Status::failed);
}

TEST_F(D8xC2Quotient, ScrambledCosetsAreNotWellDefined) {
  const auto q = build_quotient(ambient, kernel);
  auto cosets = q.cosets();
  std::swap(cosets[1][1], cosets[2][1]);
  const QuotientGroup broken(g, cosets);
  const std::vector<std::size_t> images{*broken.locate(orbit.units[0]), *broken.locate(orbit.units[1])};
  const auto checks = verify_wreath(broken, images, *broken.locate(NormalizedUnit::embed(g, w.a)), 1, false);
  EXPECT_EQ(find_check(checks, "quotient-well-defined")->status, Check::Status::failed);
}

TEST_F(D8xC2Quotient, WrongImagesFailShiftCheck) {
  const auto q = build_quotient(ambient, kernel);
  const std::vector<std::size_t> images{*q.locate(orbit.units[0]), *q.locate(orbit.units[0])};
  const auto checks = verify_wreath(q, images, *q.locate(NormalizedUnit::embed(g, w.a)), 1, true);
  EXPECT_EQ(find_check(checks, "regular-shift-action")->status, Check::Status::failed);
  EXPECT_EQ(find_check(checks, "oracle-isomorphism")->status, Check::Status::skipped);
}

TEST(BuildOrbit, ClosedFormMismatchIsHardError) {
  // An invalid witness (b central, so (b,a) = 1) still yields a consistent
  // orbit but of the wrong length to wrap around when s is overstated.
  const auto g = load(kD8xC2);
  Witness w{word(g, "a"), word(g, "b"), word(g, "z"), 2, 2};
  EXPECT_THROW(verify_base_group(build_orbit(g, w)), ConstructionError);
}

TEST(VerifyBaseGroup, CommutatorRepetitionIsCaught) {
  const auto g = load(kD8xC2);
  // b = z is central: every h^{a^i} coincides, so the orbit units repeat.
  Witness w{word(g, "a"), word(g, "c"), word(g, "z"), 1, 2};
  const auto orbit = build_orbit(g, w);
  EXPECT_THROW(verify_base_group(orbit), ConstructionError);
}

TEST(Pipeline, DeterministicReports) {
  const auto g = load(kD8xC2);
  SectionOptions options;
  options.oracle = true;
  const auto r1 = to_json(g, run_construction(g, options)).dump();
  const auto g2 = load(kD8xC2);
  const auto r2 = to_json(g2, run_construction(g2, options)).dump();
  EXPECT_EQ(r1, r2);
}

TEST(Pipeline, OrderThirtyTwoWithCyclicDerivedOfOrderFour) {
  const auto g = load_file(corpus_dir() / "o32/32_24.pc2");
  SectionOptions options;
  options.oracle = true;
  const auto r = run_construction(g, options);
  EXPECT_EQ(r.witness.s, 2);
  EXPECT_EQ(r.base_order, 16u);
  EXPECT_EQ(r.quotient_order, 64u);
  EXPECT_EQ(r.ambient_order, std::size_t{16} << r.witness.k);
  EXPECT_TRUE(r.verdict);
}

}  // namespace
}  // namespace unitwreath
