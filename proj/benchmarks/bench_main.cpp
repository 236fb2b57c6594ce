#include <benchmark/benchmark.h>

#include <random>

#include "evlogic/formula.hpp"
#include "evlogic/model.hpp"
#include "evlogic/representation.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/semantics.hpp"
#include "evlogic/validity.hpp"

using namespace evlogic;

namespace {

Family random_family(std::mt19937_64& rng, std::size_t n, std::size_t sets) {
  Family f;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 0; i < sets; ++i) f.push_back(WorldSet::from_mask(1 + rng() % full));
  return normalized(f);
}

}  // namespace

static void BM_MaximalFipFamilies(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Family> fams;
  for (int i = 0; i < 64; ++i) fams.push_back(random_family(rng, n, 2 * n));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(maximal_fip_families(fams[i++ % fams.size()], WorldSet::full(n)));
}
BENCHMARK(BM_MaximalFipFamilies)->Arg(6)->Arg(16)->Arg(48);

static void BM_DerivedBelief(benchmark::State& state) {
  ModelBounds b;
  b.min_worlds = b.max_worlds = static_cast<std::size_t>(state.range(0));
  b.max_evidence_sets_per_world = 8;
  b.max_distinct_proper_sets = 8;
  const EvidenceModel m = random_model(5, b).base;
  for (auto _ : state) benchmark::DoNotOptimize(derived_belief(m));
}
BENCHMARK(BM_DerivedBelief)->Arg(4)->Arg(8)->Arg(16);

static void BM_CounterBeliefCheck(benchmark::State& state) {
  const EvidenceModel m = counter_belief_model();
  const Formula f = parse("B{p} q | B{~p} q");
  for (auto _ : state) {
    Evaluator ev(m);
    benchmark::DoNotOptimize(ev.truth_set(f));
  }
}
BENCHMARK(BM_CounterBeliefCheck);

static void BM_EvaluateDepthTwo(benchmark::State& state) {
  const EvidenceModel m = counter_belief_model();
  const auto formulas = enumerate_formulas({"p", "q"}, 2, basic_operators());
  for (auto _ : state) {
    Evaluator ev(m);
    for (const auto& f : formulas) benchmark::DoNotOptimize(ev.truth_set(f));
  }
  state.counters["formulas"] = static_cast<double>(formulas.size());
}
BENCHMARK(BM_EvaluateDepthTwo)->Unit(benchmark::kMillisecond);

static void BM_EvidenceAddition(benchmark::State& state) {
  const EvidenceModel m = staircase_model();
  const Formula f = parse("[+p] [B] p & [+~p] <B> p");
  for (auto _ : state) {
    Evaluator ev(m);
    benchmark::DoNotOptimize(ev.truth_set(f));
  }
}
BENCHMARK(BM_EvidenceAddition);

static void BM_FlatRepresentation(benchmark::State& state) {
  ModelBounds b;
  b.min_worlds = b.max_worlds = 3;
  b.atoms = {"p"};
  b.class_filter = ModelClass::Flat;
  const GeneralModel g = random_model(2, b);
  for (auto _ : state) benchmark::DoNotOptimize(verify_representation(g, RepLogic::Flat, 2, 3));
}
BENCHMARK(BM_FlatRepresentation)->Unit(benchmark::kMillisecond);

static void BM_AxiomSweep(benchmark::State& state) {
  SweepOptions o;
  o.bounds.max_worlds = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Sweeper s(o);
    benchmark::DoNotOptimize(s.check_axiom("k-b", ModelClass::All));
  }
}
BENCHMARK(BM_AxiomSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_HarmonySweep(benchmark::State& state) {
  ModelBounds b;
  b.max_worlds = 3;
  for (auto _ : state) benchmark::DoNotOptimize(harmony_sweep(b));
}
BENCHMARK(BM_HarmonySweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
