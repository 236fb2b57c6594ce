#include <gtest/gtest.h>

#include "evlogic/error.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/semantics.hpp"
#include "evlogic/validity.hpp"

using namespace evlogic;

namespace {

SweepOptions small() {
  SweepOptions o;
  o.bounds.max_worlds = 2;
  return o;
}

// Re-checks a counterexample with the evaluator alone.
void expect_real(const Counterexample& cx) {
  Evaluator ev(cx.model, Mode::Explicit);
  EXPECT_FALSE(ev.eval(cx.world, cx.instance)) << render(cx.instance);
  for (const auto& p : cx.premises) EXPECT_TRUE(ev.valid(p)) << render(p);
}

}  // namespace

TEST(Registry, NamesAndLookup) {
  const auto& reg = axiom_registry();
  EXPECT_EQ(reg.size(), 16u);
  EXPECT_EQ(find_axiom("flatness").classes, (std::vector<ModelClass>{ModelClass::Flat, ModelClass::Concise}));
  EXPECT_TRUE(find_axiom("mp").rule);
  EXPECT_THROW(find_axiom("nope"), Error);
  for (const auto& e : reg) {
    EXPECT_FALSE(e.schemas.empty()) << e.name;
    EXPECT_EQ(e.rule, !e.premises.empty()) << e.name;
  }
  EXPECT_TRUE(declared_for(find_axiom("flatness"), ModelClass::Intended));
  EXPECT_TRUE(declared_for(find_axiom("uniformity"), ModelClass::Concise));
  EXPECT_FALSE(declared_for(find_axiom("conciseness"), ModelClass::Uniform));
}

TEST(Sweep, SoundOverDeclaredClassesSmall) {
  SweepOptions o = small();
  o.random_models = 30;
  Sweeper s(o);
  for (const auto& r : s.soundness()) {
    EXPECT_TRUE(r.passed()) << r.name << " over " << to_string(r.cls);
    EXPECT_FALSE(r.exploration);
    EXPECT_GT(r.frames, 0u);
  }
}

TEST(Sweep, ExplorationFindsRealCounterexamples) {
  Sweeper s(small());
  for (const auto& [name, cls] : std::vector<std::pair<std::string, ModelClass>>{
           {"conciseness", ModelClass::All}, {"maximality", ModelClass::All}, {"uniformity", ModelClass::Flat}}) {
    const SweepResult r = s.check_axiom(name, cls);
    EXPECT_TRUE(r.exploration);
    ASSERT_TRUE(r.counterexample.has_value()) << name;
    expect_real(*r.counterexample);
  }
}

TEST(Sweep, AdHocSchemasAndRuleLookup) {
  // Seriality of belief fails on models with an empty belief row.
  Sweeper s(small());
  const SweepResult r = s.check_schema("b-seriality", parse_schema("<B> true"), ModelClass::All);
  ASSERT_TRUE(r.counterexample.has_value());
  expect_real(*r.counterexample);
  EXPECT_TRUE(s.check_rule("n-a").passed());
  EXPECT_THROW(s.check_rule("flatness"), Error);
  EXPECT_THROW(s.check_axiom("mp", ModelClass::All), Error);
}

TEST(Sweep, SchemaRestrictions) {
  Sweeper s(small());
  EXPECT_THROW(s.check_schema("atom", parse("[B] p"), ModelClass::All), Error);
  EXPECT_THROW(s.check_schema("cond", parse_schema("B{F} G"), ModelClass::All), Error);
  // Belief is definable from plausibility on uniform intended models, but
  // not on uniform general ones, where some maximal worlds are not believed.
  const Schema def = parse_schema("[A]<P>[P]F <-> [B]F");
  EXPECT_FALSE(s.check_schema("definability", def, ModelClass::Uniform).passed());
  SweepOptions o = small();
  o.source = FamilySource::Intended;
  EXPECT_TRUE(Sweeper(o).check_schema("definability", def, ModelClass::Uniform).passed());
}

TEST(Sweep, FreeFunctionsAgreeWithSweeper) {
  const SweepResult a = check_axiom("k-b", ModelClass::All, small());
  Sweeper s(small());
  const SweepResult b = s.check_axiom("k-b", ModelClass::All);
  EXPECT_EQ(a.frames, b.frames);
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_TRUE(check_rule("mp", small()).passed());
}

TEST(Recursion, LawsHoldOnSmallFrames) {
  const auto results = recursion_suite(small());
  EXPECT_EQ(results.size(), recursion_laws().size());
  for (const auto& r : results) EXPECT_TRUE(r.passed()) << r.name;
}

TEST(Harmony, SmallSweep) {
  ModelBounds b;
  b.max_worlds = 2;
  const HarmonySweep h = harmony_sweep(b);
  EXPECT_FALSE(h.mismatch.has_value());
  EXPECT_GT(h.checks, 0u);
}

TEST(Witnesses, ReferenceExamplesPass) {
  for (const auto& c : reference_examples()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_EQ(counter_belief_model().size(), 6u);
  EXPECT_EQ(staircase_model().size(), 4u);
  EXPECT_FALSE(validate(constraint_violation_model()).valid);
  EXPECT_TRUE(validate(one_point_model()).concise);
}
