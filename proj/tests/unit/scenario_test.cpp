#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/validity.hpp"

using namespace evlogic;

namespace {

Family to_family(const oracle::Fam& f) {
  Family out;
  for (auto m : f) out.push_back(WorldSet::from_mask(m));
  return out;
}

std::set<oracle::Mask> masks(const std::vector<WorldSet>& sets) {
  std::set<oracle::Mask> out;
  for (const auto& s : sets) out.insert(s.mask());
  return out;
}

}  // namespace

TEST(Fip, SmallCases) {
  EXPECT_TRUE(has_fip({}));
  EXPECT_TRUE(has_fip({WorldSet{0, 1}, WorldSet{1, 2}}));
  EXPECT_FALSE(has_fip({WorldSet{0, 1}, WorldSet{1, 2}, WorldSet{0, 2}}));
  EXPECT_FALSE(has_fip({WorldSet{}}));
}

TEST(Fip, MaximalFamiliesMatchBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const oracle::Fam sets = oracle::random_family(rng, n, 10);
    const oracle::Mask x = rng() % 3 == 0 ? oracle::full(n) : rng() % (oracle::full(n) + 1);
    const Family fam = to_family(sets);

    std::set<std::set<oracle::Mask>> expected;
    for (oracle::Mask pick : oracle::maximal_subfamilies(sets, x)) {
      std::set<oracle::Mask> members;
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (oracle::has(pick, i)) members.insert(sets[i]);
      expected.insert(members);
    }
    std::set<std::set<oracle::Mask>> got;
    for (const auto& f : maximal_fip_families(fam, WorldSet::from_mask(x))) got.insert(masks(f));
    EXPECT_EQ(got, expected) << "trial " << trial;

    const auto meets = oracle::maximal_meets(sets, x);
    EXPECT_EQ(masks(maximal_fip_meets(fam, WorldSet::from_mask(x))), meets);
    oracle::Mask points = 0;
    for (auto m : meets) points |= m;
    EXPECT_EQ(maximal_fip_points(fam, WorldSet::from_mask(x)).mask(), points);
  }
}

TEST(Fip, EmptyRestrictionGivesEmptyFamily) {
  const auto fams = maximal_fip_families({WorldSet{0}, WorldSet{1}}, WorldSet{});
  ASSERT_EQ(fams.size(), 1u);
  EXPECT_TRUE(fams[0].empty());
}

TEST(Scenarios, DerivedRelationsMatchBruteForce) {
  ModelBounds b;
  b.max_worlds = 3;
  b.atoms = {};
  for_each_evidence_model(b, [&](const EvidenceModel& m) {
    const oracle::Model o = oracle::from(m);
    EXPECT_EQ(oracle::rows(derived_belief(m)), oracle::belief(o));
    EXPECT_EQ(oracle::rows(derived_plausibility(m)), oracle::specialization(o));
    return true;
  });
}

TEST(Scenarios, RandomLargerModels) {
  ModelBounds b;
  b.max_worlds = 6;
  b.max_evidence_sets_per_world = 6;
  b.max_distinct_proper_sets = 8;
  b.atoms = {};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const EvidenceModel m = random_model(seed, b).base;
    const oracle::Model o = oracle::from(m);
    EXPECT_EQ(oracle::rows(derived_belief(m)), oracle::belief(o)) << seed;
    for (World w = 0; w < m.size(); ++w) {
      std::set<oracle::Mask> meets;
      for (const auto& s : scenarios(m, w)) {
        EXPECT_EQ(s.anchor, w);
        EXPECT_EQ(s.meet, meet(s.family, m.universe()));
        meets.insert(s.meet.mask());
      }
      EXPECT_EQ(meets, oracle::maximal_meets(o.evidence[w], oracle::full(m.size())));
    }
  }
}

TEST(Scenarios, StaircaseAtWorldTwo) {
  const EvidenceModel m = staircase_model();
  const auto sc = scenarios(m, 1);
  ASSERT_EQ(sc.size(), 2u);
  EXPECT_EQ(masks({sc[0].meet, sc[1].meet}), (std::set<oracle::Mask>{0b0010, 0b0100}));
  const auto rel = relative_scenarios(m, 1, WorldSet{0, 3});
  EXPECT_EQ(rel.size(), 2u);
  for (const auto& r : rel) {
    EXPECT_EQ(r.restriction, (WorldSet{0, 3}));
    EXPECT_EQ(r.meet.size(), 1u);
  }
}

TEST(Scenarios, ReliableAndUnreliable) {
  const EvidenceModel m = staircase_model();
  EXPECT_EQ(normalized(reliable_evidence(m, 2)), normalized({WorldSet{1, 2}, WorldSet{2, 3}, m.universe()}));
  EXPECT_EQ(unreliable_evidence(m, 2), (Family{WorldSet{0, 1}}));
}

TEST(Scenarios, LiftKeepsEvidence) {
  const EvidenceModel m = counter_belief_model();
  const GeneralModel g = lift(m);
  EXPECT_EQ(g.base, m);
  EXPECT_EQ(*g.belief, derived_belief(m));
  EXPECT_EQ(*g.plausibility, derived_plausibility(m));
  EXPECT_EQ(g.belief->range(), maximal_worlds(*g.plausibility));
}
