#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evlogic/formula.hpp"
#include "evlogic/model.hpp"
#include "evlogic/morphism.hpp"

namespace evlogic {

/// (w, x, f): a base world, a tag (a believed world in the flat case, 0 in
/// the concise case) and a labeling f : W → {0,1} stored as a bitmask.
struct RepWorld {
  World base = 0;
  World tag = 0;
  std::uint64_t labeling = 0;
};

enum class RepLogic { Flat, Concise };

std::string to_string(RepLogic logic);
RepLogic rep_logic_from_string(const std::string& s);

struct RepModel {
  RepLogic logic = RepLogic::Flat;
  std::vector<RepWorld> worlds;
  /// Evidence and pulled-back valuation over the rep-world indices.
  EvidenceModel model;
  /// The constructed order on rep-worlds.
  Relation order;
  /// π(w, x, f) = w.
  std::vector<World> projection;
  /// B[W] for the flat construction, {0} for the concise one.
  WorldSet tags;
};

/// Flat construction over W × B[W] × 2^W. Throws ModelError unless the
/// model is valid and flat with a nonempty B[W], or the result would
/// exceed the world capacity. Models without relations use the derived
/// ones. The returned map goes from the lifted rep model onto m.
std::pair<RepModel, PMorphism> build_flat_representation(const GeneralModel& m);

/// Concise construction over W × {0} × 2^W with uniform evidence. Throws
/// ModelError unless the model is valid and concise.
std::pair<RepModel, PMorphism> build_concise_representation(const GeneralModel& m);

std::pair<RepModel, PMorphism> build_representation(const GeneralModel& m, RepLogic logic);

/// The specialization order of the rep evidence equals the constructed order.
bool verify_plausibility_identity(const RepModel& rep);

struct ScenarioCheck {
  bool holds = true;
  std::size_t checked = 0;  // rep-worlds examined
  World rep_world = 0;      // first failure
  std::string detail;
};

/// At each rep-world r = (w, x, f) in `sample` (all when empty): every
/// scenario of r is {W▽} ∪ E^v(r) for some v with w B v, and π maps its
/// meet onto ↑v.
ScenarioCheck verify_scenario_structure(const RepModel& rep, const GeneralModel& m,
                                        const std::vector<World>& sample = {});

struct RepresentationReport {
  bool passed = false;
  RepLogic logic = RepLogic::Flat;
  std::size_t rep_size = 0;
  bool size_law = false;
  PMorphismReport pmorphism;
  TruthPreservation truth;
  bool plausibility_identity = false;
  ScenarioCheck scenarios;
  ClassReport rep_class;  // validate() of the lifted rep model
};

/// Builds the representation, lifts it and checks the p-morphism clauses,
/// truth agreement for every formula over the model's atoms up to `depth`,
/// the plausibility identity and the scenario structure. Throws Error when
/// m has more than `max_worlds` worlds.
RepresentationReport verify_representation(const GeneralModel& m, RepLogic logic, int depth,
                                           std::size_t max_worlds = 3);

/// Quotient by agreement on the pivot's subformulas and on ≼-maximality.
struct FiltrationQuotient {
  GeneralModel source;  // with relations (derived ones filled in)
  Formula pivot;
  std::vector<Formula> subformulas;
  std::vector<WorldSet> classes;
  std::vector<World> class_map;
  GeneralModel quotient;
  ClassReport report;  // validate() of the quotient
};

/// Minimal filtration. Throws SignatureError for pivots outside the basic
/// static language.
FiltrationQuotient filtrate(const GeneralModel& m, const Formula& pivot);

struct FiltrationTruth {
  bool holds = true;
  std::optional<Formula> formula;
  World world = 0;
};

/// w ⊨ ψ iff class_map(w) ⊨ ψ for every subformula ψ of the pivot.
FiltrationTruth filtration_preserves_truth(const FiltrationQuotient& q);

}  // namespace evlogic
