// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "evlogic/formula.hpp"
#include "evlogic/model.hpp"
#include "evlogic/representation.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/semantics.hpp"
#include "evlogic/validity.hpp"

using namespace evlogic;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

SweepOptions sweep_family() {
  SweepOptions o;
  o.bounds.max_worlds = 3;
  o.bounds.max_distinct_proper_sets = 3;
  o.bounds.atoms = {"p", "q"};
  o.depth = 2;
  return o;
}

Outcome counter_belief() {
  const auto start = std::chrono::steady_clock::now();
  const EvidenceModel m = counter_belief_model();
  Evaluator ev(m);
  const WorldSet b = ev.truth_set(parse("[B] q"));
  const WorldSet split = ev.truth_set(parse("B{p} q | B{~p} q"));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << "[B] q true at " << b.size() << "/6, split conditional true at " << split.size() << "/6, " << ms << " ms";
  return {b == m.universe() && split.empty() && ms < 1000.0, d.str()};
}

Outcome soundness(double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions o = sweep_family();
  o.random_models = 1000;
  Sweeper s(o);
  const auto results = s.soundness();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = seconds < 300.0;
  std::uint64_t frames = 0, instances = 0;
  std::string failures;
  for (const auto& r : results) {
    frames += r.frames;
    instances += r.instances;
    if (!r.passed() || r.exploration) {
      ok = false;
      failures += " " + r.name + "/" + to_string(r.cls);
    }
  }
  std::ostringstream d;
  d << results.size() << " row/class runs, " << frames << " frames, " << instances << " set assignments, " << seconds
    << " s";
  if (!failures.empty()) d << "; failing:" << failures;
  return {ok, d.str()};
}

Outcome flatness() {
  SweepOptions o = sweep_family();
  o.source = FamilySource::Intended;
  Sweeper s(o);
  const SweepResult r = s.check_axiom("flatness", ModelClass::Intended);
  std::ostringstream d;
  d << r.frames << " intended frames, " << r.instances << " set assignments";
  if (r.counterexample) d << "; counterexample " << render(r.counterexample->instance);
  return {r.passed(), d.str()};
}

Outcome definability() {
  SweepOptions o = sweep_family();
  o.source = FamilySource::Intended;
  Sweeper s(o);
  const SweepResult r = s.check_schema("definability", parse_schema("[A]<P>[P]F <-> [B]F"), ModelClass::Uniform);
  bool ok = r.passed() && r.frames > 0;
  std::uint64_t uniform = 0, mismatches = 0;
  ModelBounds b = o.bounds;
  b.atoms = {};
  for_each_evidence_model(b, [&](const EvidenceModel& m) {
    const GeneralModel g = lift(m);
    if (!validate(g).uniform) return true;
    ++uniform;
    if (g.belief->range() != maximal_worlds(*g.plausibility)) ++mismatches;
    return true;
  });
  ok = ok && mismatches == 0 && uniform > 0;
  std::ostringstream d;
  d << r.frames << " uniform intended frames, " << r.instances << " set assignments; range(B) = maximal on "
    << (uniform - mismatches) << "/" << uniform;
  return {ok, d.str()};
}

Outcome representation(double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t exhaustive = 0, failed = 0, size_law = 0, concise_class = 0;
  std::string first_failure;
  auto note = [&](const RepresentationReport& r, const std::string& what) {
    if (!r.size_law) ++size_law;
    if (!r.passed) {
      ++failed;
      if (first_failure.empty()) first_failure = what;
    }
  };
  ModelBounds b;
  b.max_worlds = 2;
  b.atoms = {"p"};
  b.class_filter = ModelClass::Flat;
  for_each_model(b, [&](const GeneralModel& g) {
    ++exhaustive;
    note(verify_representation(g, RepLogic::Flat, 2, 3), "exhaustive flat #" + std::to_string(exhaustive));
    return true;
  });
  ModelBounds rb;
  rb.max_worlds = 3;
  rb.atoms = {"p"};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    rb.class_filter = ModelClass::Flat;
    note(verify_representation(random_model(seed, rb), RepLogic::Flat, 2, 3), "flat seed " + std::to_string(seed));
    rb.class_filter = ModelClass::Concise;
    const RepresentationReport r = verify_representation(random_model(seed, rb), RepLogic::Concise, 2, 3);
    note(r, "concise seed " + std::to_string(seed));
    if (!(r.rep_class.flat && r.rep_class.uniform && r.rep_class.concise)) ++concise_class;
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << exhaustive << " exhaustive flat models + 200 seeded; " << failed << " failed, " << size_law
    << " size-law misses, " << concise_class << " non-concise concise reps, " << seconds << " s";
  if (!first_failure.empty()) d << "; first failure: " << first_failure;
  return {failed == 0 && size_law == 0 && concise_class == 0 && exhaustive > 0 && seconds < 600.0, d.str()};
}

Outcome recursion() {
  const auto results = recursion_suite(sweep_family());
  bool ok = !results.empty();
  std::uint64_t models = 0;
  std::string failures;
  for (const auto& r : results) {
    models = std::max(models, r.models);
    if (!r.passed()) {
      ok = false;
      failures += " " + r.name;
    }
  }
  std::ostringstream d;
  d << results.size() << " laws over " << models << " models";
  if (!failures.empty()) d << "; failing:" << failures;
  return {ok, d.str()};
}

Outcome harmony() {
  const HarmonySweep h = harmony_sweep(sweep_family().bounds);
  std::ostringstream d;
  d << h.frames << " frames, " << h.checks << " evidence sets, " << (h.mismatch ? 1 : 0) << " mismatches";
  return {!h.mismatch && h.checks > 0, d.str()};
}

Outcome filtration() {
  const auto pivots = enumerate_formulas({"p", "q"}, 2, basic_operators());
  const std::vector<ModelClass> classes{ModelClass::All, ModelClass::Flat, ModelClass::Uniform, ModelClass::Concise,
                                        ModelClass::Intended};
  std::mt19937_64 rng(2024);
  ModelBounds b;
  b.max_worlds = 5;
  b.atoms = {"p", "q"};
  std::uint64_t truth_failures = 0, concise_sources = 0, concise_kept = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    b.class_filter = classes[seed % classes.size()];
    const GeneralModel g = random_model(seed, b);
    const Formula pivot = pivots[rng() % pivots.size()];
    const FiltrationQuotient q = filtrate(g, pivot);
    if (!filtration_preserves_truth(q).holds) ++truth_failures;
    if (validate(g).concise) {
      ++concise_sources;
      if (q.report.valid && q.report.concise) ++concise_kept;
    }
  }
  std::ostringstream d;
  d << "500 models, " << truth_failures << " truth failures; finding: " << concise_kept << "/" << concise_sources
    << " quotients of concise models are valid and concise";
  return {truth_failures == 0, d.str()};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(99);
  std::uint64_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const oracle::Fam sets = oracle::random_family(rng, n, 10);
    const oracle::Mask x = i % 2 ? oracle::full(n) : rng() % (oracle::full(n) + 1);
    Family fam;
    for (auto s : sets) fam.push_back(WorldSet::from_mask(s));
    std::set<std::set<oracle::Mask>> expected, got;
    for (auto pick : oracle::maximal_subfamilies(sets, x)) {
      std::set<oracle::Mask> members;
      for (std::size_t k = 0; k < sets.size(); ++k)
        if (oracle::has(pick, k)) members.insert(sets[k]);
      expected.insert(members);
    }
    for (const auto& f : maximal_fip_families(fam, WorldSet::from_mask(x))) {
      std::set<oracle::Mask> members;
      for (const auto& s : f) members.insert(s.mask());
      got.insert(members);
    }
    std::set<oracle::Mask> meets;
    for (const auto& s : maximal_fip_meets(fam, WorldSet::from_mask(x))) meets.insert(s.mask());
    if (got != expected || meets != oracle::maximal_meets(sets, x)) ++mismatches;
  }
  return {mismatches == 0, "1000 families, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  double sweep_s = 0, rep_s = 0;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"counter-belief model verdicts", counter_belief},
      {"soundness sweep", [&] { return soundness(sweep_s); }},
      {"flatness on finite intended models", flatness},
      {"belief definability on uniform intended models", definability},
      {"representation", [&] { return representation(rep_s); }},
      {"recursion laws", recursion},
      {"harmony", harmony},
      {"filtration", filtration},
      {"scenario engine against brute force", oracle_equivalence},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << o.detail << ")" << std::endl;
  }
  return all ? 0 : 1;
}
