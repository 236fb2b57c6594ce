#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "evlogic/formula.hpp"
#include "evlogic/model.hpp"
#include "evlogic/semantics.hpp"

namespace evlogic {

/// One row of the axiom table. Axioms carry one or more schemas that must
/// all be valid; rules carry premises and a single conclusion in `schemas`.
struct AxiomEntry {
  std::string name;
  bool rule = false;
  std::vector<Schema> premises;
  std::vector<Schema> schemas;
  /// Classes the row is sound for. All covers every class.
  std::vector<ModelClass> classes;
};

/// tautology, s5-a, k-b, s4-p, no-empty-evidence, pullout, universality,
/// plausible-evidence, b-monotonicity, flatness, uniformity, maximality,
/// conciseness, then the rules e-monotonicity, mp and n-a.
const std::vector<AxiomEntry>& axiom_registry();

/// Throws Error for an unknown name.
const AxiomEntry& find_axiom(const std::string& name);

/// True when every model of `cls` lies in one of the row's classes
/// (concise is flat and uniform; finite intended models are flat).
bool declared_for(const AxiomEntry& entry, ModelClass cls);

/// Which models a sweep visits.
enum class FamilySource { Both, General, Intended };

struct SweepOptions {
  /// Exhaustive family: worlds, evidence set bounds and the atoms used for
  /// model counts, definable instances and counterexample valuations.
  ModelBounds bounds{3, 4, 3, {"p", "q"}, ModelClass::All, 1};
  FamilySource source = FamilySource::Both;
  /// Depth of the definable instance pool (random models, counterexamples).
  int depth = 2;
  std::uint64_t seed = 0;
  /// Seeded random models per class, in addition to the exhaustive family.
  std::size_t random_models = 0;
  std::size_t random_max_worlds = 5;
};

struct Counterexample {
  GeneralModel model;  // carries B and ≼; evaluated in explicit mode
  World world = 0;
  Formula instance;
  /// Premise instances of a rule, each valid on `model`.
  std::vector<Formula> premises;
};

struct SweepResult {
  std::string name;
  ModelClass cls = ModelClass::All;
  /// Run outside the row's declared classes.
  bool exploration = false;
  /// Models covered: exhaustive frames times valuations over the atoms,
  /// plus random models.
  std::uint64_t models = 0;
  std::uint64_t frames = 0;
  /// Schema evaluations under one assignment of world sets (or formulas)
  /// to the metavariables.
  std::uint64_t instances = 0;
  std::optional<Counterexample> counterexample;
  /// Failing assignments for which no instance within the definable pool
  /// reproduced the failure.
  std::uint64_t undefinable_failures = 0;
  bool passed() const { return !counterexample && undefinable_failures == 0; }
};

/// Frame-level sweeps. Over each frame the metavariables range over all
/// sets of worlds, which covers every instance over every valuation. Frames
/// are reduced to the operator tables a schema reads, so each distinct
/// table combination is evaluated once. The enumeration pass is shared by
/// every check made through one sweeper.
class Sweeper {
 public:
  explicit Sweeper(SweepOptions options = {});
  ~Sweeper();
  Sweeper(Sweeper&&) noexcept;
  Sweeper& operator=(Sweeper&&) noexcept;

  const SweepOptions& options() const;

  /// Throws Error for an unknown name or a rule.
  SweepResult check_axiom(const std::string& name, ModelClass cls);
  /// Throws Error for an unknown name or an axiom.
  SweepResult check_rule(const std::string& name, ModelClass cls = ModelClass::All);
  /// A single schema over metavariables. It must use only the Booleans and
  /// the A, B, E, P modalities, and no atoms; throws Error otherwise.
  SweepResult check_schema(const std::string& label, const Schema& schema, ModelClass cls);

  /// Every row over each of its declared classes.
  std::vector<SweepResult> soundness();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SweepResult check_axiom(const std::string& name, ModelClass cls, const SweepOptions& options);
SweepResult check_rule(const std::string& name, const SweepOptions& options);

/// Instances substituted for the metavariables of the recursion laws.
std::vector<Formula> default_recursion_instances();

struct RecursionLaw {
  std::string name;
  Schema schema;
  /// Metavariables ranging over atoms only (the atom law).
  std::vector<std::string> atom_slots;
};

/// atoms, conjunction, negation, evidence, universal, belief, conditional.
const std::vector<RecursionLaw>& recursion_laws();

/// Each law, instantiated with `instances` (atom slots take the bounds'
/// atoms), checked as a biconditional at every world of every evidence
/// model in the exhaustive family, intended mode.
std::vector<SweepResult> recursion_suite(const SweepOptions& options,
                                         const std::vector<Formula>& instances = default_recursion_instances());

struct HarmonySweep {
  std::uint64_t frames = 0;
  std::uint64_t checks = 0;
  std::optional<std::pair<EvidenceModel, WorldSet>> mismatch;
};

/// Cutting ≼_E along x against deriving ≼ after adding x, for every
/// evidence frame in the bounds and every nonempty x.
HarmonySweep harmony_sweep(const ModelBounds& bounds);

// Witness models.

/// W = {1..6}, uniform E = {W, {1,2}, {2,3}, {4,5}, {5,6}},
/// V(p) = {2,3,4}, V(q) = {2,5}.
EvidenceModel counter_belief_model();
/// W = {1..4}, uniform E = {W, {1,2}, {2,3}, {3,4}}, V(p) = {2,3}.
EvidenceModel staircase_model();
/// W = {w,v}, E = {W}, B = {(w,w)}, ≼ total. Fails constraint 3.
GeneralModel constraint_violation_model();
/// W = {1}, E(1) = {{1}}, B = ≼ = {(1,1)}.
GeneralModel one_point_model();

struct ExampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Fixed verdicts on the witness models.
std::vector<ExampleCheck> reference_examples();

}  // namespace evlogic
