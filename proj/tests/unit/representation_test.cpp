#include <gtest/gtest.h>

#include <map>
#include <random>

#include "../support/oracles.hpp"
#include "evlogic/error.hpp"
#include "evlogic/representation.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/validity.hpp"

using namespace evlogic;

namespace {

std::size_t expected_flat_size(const GeneralModel& g) {
  const GeneralModel m = g.has_relations() ? g : lift(g.base);
  const std::size_t n = m.size();
  return n * m.belief->range().size() * (std::size_t{1} << n);
}

}  // namespace

TEST(Representation, OnePoint) {
  for (auto logic : {RepLogic::Flat, RepLogic::Concise}) {
    const RepresentationReport r = verify_representation(one_point_model(), logic, 2);
    EXPECT_TRUE(r.passed) << to_string(logic);
    EXPECT_EQ(r.rep_size, 2u);
    EXPECT_TRUE(r.size_law);
  }
}

TEST(Representation, FlatSizeLawAndProjection) {
  ModelBounds b;
  b.max_worlds = 3;
  b.atoms = {"p"};
  b.class_filter = ModelClass::Flat;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GeneralModel g = random_model(seed, b);
    auto [rep, pi] = build_flat_representation(g);
    EXPECT_EQ(rep.worlds.size(), expected_flat_size(g));
    EXPECT_EQ(pi.map, rep.projection);
    EXPECT_EQ(pi.target, g);
    for (std::size_t i = 0; i < rep.worlds.size(); ++i) {
      EXPECT_EQ(rep.projection[i], rep.worlds[i].base);
      EXPECT_TRUE(g.belief->range().contains(rep.worlds[i].tag));
    }
    EXPECT_TRUE(verify_plausibility_identity(rep));
  }
}

TEST(Representation, ConciseModelsGiveConciseRepresentations) {
  ModelBounds b;
  b.max_worlds = 3;
  b.atoms = {"p"};
  b.class_filter = ModelClass::Concise;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GeneralModel g = random_model(seed, b);
    const RepresentationReport r = verify_representation(g, RepLogic::Concise, 2);
    EXPECT_TRUE(r.passed) << seed;
    EXPECT_TRUE(r.rep_class.flat && r.rep_class.uniform && r.rep_class.concise);
    EXPECT_EQ(r.rep_size, g.size() << g.size());
  }
}

TEST(Representation, RejectsUnsuitableInput) {
  EXPECT_THROW(build_flat_representation(constraint_violation_model()), ModelError);
  EvidenceModel split(2);
  split.evidence[0].push_back(WorldSet{0});
  normalize(split.evidence[0]);
  const GeneralModel not_concise = lift(split);
  ASSERT_FALSE(validate(not_concise).concise);
  EXPECT_THROW(build_concise_representation(not_concise), ModelError);
  EXPECT_THROW(verify_representation(lift(staircase_model()), RepLogic::Flat, 1, 3), Error);
  EXPECT_EQ(rep_logic_from_string("concise"), RepLogic::Concise);
  EXPECT_THROW(rep_logic_from_string("round"), Error);
}

TEST(Representation, MutationsAreDetected) {
  const GeneralModel g = random_model(3, ModelBounds{2, 4, 3, {"p"}, ModelClass::Flat, 2});
  auto [rep, pi] = build_flat_representation(g);
  ASSERT_TRUE(check_pmorphism(pi).passed());

  // An extra order pair no longer matches the evidence.
  RepModel bad = rep;
  bool changed = false;
  for (World a = 0; a < bad.order.size() && !changed; ++a)
    for (World c = 0; c < bad.order.size() && !changed; ++c)
      if (!bad.order.contains(a, c)) {
        bad.order.add(a, c);
        changed = true;
      }
  ASSERT_TRUE(changed);
  EXPECT_FALSE(verify_plausibility_identity(bad));

  // Moving one projection target breaks the atom or relation clauses.
  PMorphism moved = pi;
  moved.map[0] = (moved.map[0] + 1) % g.size();
  EXPECT_FALSE(check_pmorphism(moved).passed() && verify_truth_preservation_up_to(moved, {"p"}, 2).holds);
}

TEST(Filtration, CounterBeliefClasses) {
  const GeneralModel g = lift(counter_belief_model());
  const FiltrationQuotient q = filtrate(g, parse("p"));
  std::set<std::set<World>> classes;
  for (const auto& c : q.classes) {
    const auto v = c.to_vector();
    classes.insert(std::set<World>(v.begin(), v.end()));
  }
  EXPECT_EQ(classes, (std::set<std::set<World>>{{0, 5}, {1}, {2, 3}, {4}}));
  EXPECT_TRUE(filtration_preserves_truth(q).holds);
  EXPECT_EQ(q.quotient.size(), 4u);
}

TEST(Filtration, ClassesMatchBruteForce) {
  // Worlds are merged iff they agree on every subformula of the pivot and
  // on maximality in the plausibility order.
  std::mt19937_64 rng(9);
  ModelBounds b;
  b.max_worlds = 5;
  b.atoms = {"p", "q"};
  const std::vector<std::string> pivots{"p", "[B] p", "<P> q & p", "[E] (p | q)", "[A] p -> [B] q", "~<E> q"};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeneralModel g = random_model(seed, b);
    const Formula pivot = parse(pivots[rng() % pivots.size()]);
    const FiltrationQuotient q = filtrate(g, pivot);
    const oracle::Model o = oracle::from(g);
    oracle::Mask maximal = 0;
    for (std::size_t w = 0; w < o.n; ++w) {
      bool top = true;
      for (std::size_t v = 0; v < o.n; ++v)
        if (oracle::has(o.order[w], v) && !oracle::has(o.order[v], w)) top = false;
      if (top) maximal |= oracle::Mask{1} << w;
    }
    std::map<std::vector<bool>, std::set<World>> groups;
    std::vector<oracle::Mask> truth;
    for (const auto& f : subformulas(pivot)) truth.push_back(oracle::eval(o, f));
    for (std::size_t w = 0; w < o.n; ++w) {
      std::vector<bool> key{oracle::has(maximal, w)};
      for (auto t : truth) key.push_back(oracle::has(t, w));
      groups[key].insert(w);
    }
    std::set<std::set<World>> expected, got;
    for (const auto& [k, s] : groups) expected.insert(s);
    for (const auto& c : q.classes) {
      const auto v = c.to_vector();
      got.insert(std::set<World>(v.begin(), v.end()));
    }
    EXPECT_EQ(got, expected) << render(pivot) << " seed " << seed;
    for (World w = 0; w < g.size(); ++w) EXPECT_TRUE(q.classes[q.class_map[w]].contains(w));
    EXPECT_TRUE(filtration_preserves_truth(q).holds);
  }
}

TEST(Filtration, RejectsNonBasicPivots) {
  const GeneralModel g = lift(staircase_model());
  EXPECT_THROW(filtrate(g, parse("[C] p")), SignatureError);
  EXPECT_THROW(filtrate(g, parse("[+p] p")), SignatureError);
  EXPECT_THROW(filtrate(g, parse("B{p} p")), SignatureError);
}
