#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "evlogic/dynamics.hpp"
#include "evlogic/error.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/validity.hpp"

using namespace evlogic;

TEST(AddEvidence, AddsEverywhere) {
  const EvidenceModel m = staircase_model();
  const WorldSet x{0, 3};
  const EvidenceModel added = add_evidence(m, x);
  for (World w = 0; w < m.size(); ++w) {
    EXPECT_NE(std::find(added.evidence[w].begin(), added.evidence[w].end(), x), added.evidence[w].end());
    EXPECT_EQ(added.evidence[w].size(), m.evidence[w].size() + 1);
  }
  EXPECT_EQ(add_evidence(added, x), added);
  EXPECT_THROW(add_evidence(m, WorldSet{}), ModelError);
}

TEST(AddEvidence, ClosedAddsUpwardClosure) {
  const GeneralModel g = lift(staircase_model());
  // 1 <= 2 in the derived order, so {1} closes to {1,2}.
  const GeneralModel out = add_evidence_closed(g, WorldSet{0});
  const WorldSet expected{0, 1};
  for (World w = 0; w < g.size(); ++w)
    EXPECT_NE(std::find(out.base.evidence[w].begin(), out.base.evidence[w].end(), expected),
              out.base.evidence[w].end());
  EXPECT_EQ(out.belief, g.belief);
  EXPECT_EQ(out.plausibility, g.plausibility);
  const UpdateRecord rec = record_add_closed(g, WorldSet{0});
  EXPECT_EQ(rec.kind, UpdateKind::AddClosed);
  EXPECT_EQ(rec.payload, expected);
  EXPECT_EQ(rec.after, out);
  EXPECT_EQ(rec.before, g);
}

TEST(Cut, RemovesPairsLeavingTheSet) {
  const Relation total = Relation::total(3);
  const Relation cut = cut_plausibility(total, WorldSet{0});
  EXPECT_FALSE(cut.contains(0, 1));
  EXPECT_FALSE(cut.contains(0, 2));
  EXPECT_TRUE(cut.contains(1, 0));
  EXPECT_TRUE(cut.contains(0, 0));
  EXPECT_TRUE(cut.is_preorder());
  const UpdateRecord rec = record_cut(lift(staircase_model()), WorldSet{0});
  EXPECT_EQ(rec.kind, UpdateKind::PlausibilityCut);
  EXPECT_EQ(to_string(rec.kind), to_string(UpdateKind::PlausibilityCut));
}

TEST(Harmony, AgreesWithSpecializationOracle) {
  ModelBounds b;
  b.max_worlds = 3;
  b.atoms = {};
  std::size_t checks = 0;
  for_each_evidence_model(b, [&](const EvidenceModel& m) {
    const oracle::Model o = oracle::from(m);
    for (oracle::Mask x = 1; x <= oracle::full(m.size()); ++x) {
      const HarmonyResult h = harmony(m, WorldSet::from_mask(x));
      const auto expected = oracle::specialization(oracle::add(o, x));
      EXPECT_EQ(oracle::rows(h.derived), expected);
      EXPECT_TRUE(h.holds);
      EXPECT_EQ(h.cut, h.derived);
      ++checks;
    }
    return true;
  });
  EXPECT_GT(checks, 0u);
  EXPECT_THROW(harmony(staircase_model(), WorldSet{}), ModelError);
}

TEST(Records, PlainAdd) {
  const GeneralModel g = lift(staircase_model());
  const UpdateRecord rec = record_add(g, WorldSet{1, 2});
  EXPECT_EQ(rec.kind, UpdateKind::Add);
  EXPECT_EQ(rec.after.base, add_evidence(g.base, WorldSet{1, 2}));
}
