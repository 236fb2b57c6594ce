#include <gtest/gtest.h>

#include "evlogic/error.hpp"
#include "evlogic/morphism.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/validity.hpp"

using namespace evlogic;

namespace {

// Two copies of the staircase glued side by side: each world of the
// double maps to its copy in the original.
GeneralModel doubled(const EvidenceModel& m) {
  const std::size_t n = m.size();
  EvidenceModel d(2 * n);
  auto both = [n](const WorldSet& s) {
    WorldSet out;
    s.for_each([&](World w) {
      out.insert(w);
      out.insert(w + n);
    });
    return out;
  };
  for (World w = 0; w < 2 * n; ++w) {
    Family f;
    for (const auto& x : m.evidence[w % n]) f.push_back(both(x));
    d.evidence[w] = normalized(f);
  }
  for (const auto& [a, s] : m.valuation) d.valuation[a] = both(s);
  return lift(d);
}

const ClauseResult* clause(const PMorphismReport& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.clause == name) return &c;
  return nullptr;
}

}  // namespace

TEST(PMorphism, IdentityPasses) {
  const GeneralModel g = lift(counter_belief_model());
  const PMorphismReport r = check_pmorphism(identity_pmorphism(g));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.surjective);
  EXPECT_EQ(r.failure(), nullptr);
  EXPECT_EQ(r.clauses.size(), 7u);
}

TEST(PMorphism, FoldingACopyPasses) {
  const GeneralModel base = lift(staircase_model());
  const GeneralModel d = doubled(staircase_model());
  PMorphism p{d, base, {}};
  for (World w = 0; w < d.size(); ++w) p.map.push_back(w % base.size());
  const PMorphismReport r = check_pmorphism(p);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.surjective);
  const TruthPreservation t = verify_truth_preservation_up_to(p, {"p"}, 2);
  EXPECT_TRUE(t.holds);
}

TEST(PMorphism, BrokenMapsAreCaught) {
  const GeneralModel g = lift(staircase_model());
  PMorphism p = identity_pmorphism(g);
  std::swap(p.map[0], p.map[1]);  // world 1 is not p, world 2 is
  const PMorphismReport r = check_pmorphism(p);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(clause(r, "atoms"), nullptr);
  EXPECT_FALSE(clause(r, "atoms")->passed);
  EXPECT_FALSE(verify_truth_preservation_up_to(p, {"p"}, 1).holds);

  p.map = {0, 1, 2, 9};
  EXPECT_THROW(check_pmorphism(p), Error);
}

TEST(PMorphism, RelationClausesOutOfScopeWithoutRelations) {
  GeneralModel plain{staircase_model(), std::nullopt, std::nullopt};
  const PMorphismReport r = check_pmorphism(identity_pmorphism(plain));
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(clause(r, "forth_B")->in_scope);
  EXPECT_TRUE(clause(r, "forth_E")->in_scope);
  EXPECT_THROW(verify_truth_preservation(identity_pmorphism(plain), {parse("[B] p")}), SignatureError);
  EXPECT_TRUE(verify_truth_preservation(identity_pmorphism(plain), {parse("[E] p")}).holds);
  EXPECT_THROW(verify_truth_preservation(identity_pmorphism(lift(plain.base)), {parse("[C] p")}), SignatureError);
}

TEST(PMorphism, SearchAndCompose) {
  const GeneralModel base = lift(staircase_model());
  const GeneralModel d = doubled(staircase_model());
  const auto found = find_surjective_pmorphism(d, base, 8);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(check_pmorphism(*found).passed());
  const PMorphism c = compose(*found, identity_pmorphism(base));
  EXPECT_EQ(c.map, found->map);
  EXPECT_THROW(compose(*found, identity_pmorphism(d)), Error);
  EXPECT_THROW(find_surjective_pmorphism(d, base, 4), Error);

  EvidenceModel other = staircase_model();
  other.valuation["p"] = WorldSet{0};
  EXPECT_FALSE(find_surjective_pmorphism(base, lift(other)).has_value());
  EXPECT_FALSE(find_surjective_pmorphism(one_point_model(), base).has_value());
}
