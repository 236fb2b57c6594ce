#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evlogic/formula.hpp"
#include "evlogic/model.hpp"

namespace evlogic {

/// A world map between two models. `map[w]` is the image of source world w.
struct PMorphism {
  GeneralModel source;
  GeneralModel target;
  std::vector<World> map;
};

struct ClauseResult {
  std::string clause;  // atoms, forth_B, back_B, forth_E, back_E, forth_P, back_P
  bool in_scope = true;
  bool passed = true;
  std::vector<World> witness;  // source worlds first, then target worlds
  std::string detail;
};

struct PMorphismReport {
  std::vector<ClauseResult> clauses;
  bool surjective = false;
  /// True iff every in-scope clause passed.
  bool passed() const;
  /// First failing clause, if any.
  const ClauseResult* failure() const;
};

PMorphism identity_pmorphism(const GeneralModel& m);

/// Checks every clause. B and ≼ clauses are in scope only when both models
/// carry the relation; evidence and atom clauses are always checked.
/// Throws Error when the map is not total into the target.
PMorphismReport check_pmorphism(const PMorphism& p);

struct TruthPreservation {
  bool holds = true;
  std::optional<Formula> formula;  // first formula whose truth differs
  World world = 0;                  // a source world where it differs
};

/// Checks [[f]]_source = π⁻¹[[f]]_target for each formula, with [B] and [P]
/// read from the stored relations. Formulas must be basic and use only the
/// shared signature: E always, B/P when both models carry them, A when the
/// map is surjective. Throws SignatureError otherwise.
TruthPreservation verify_truth_preservation(const PMorphism& p, const std::vector<Formula>& formulas);

/// Same check for every basic formula of depth <= depth over `atoms` in the
/// shared signature. Formulas are grown level by level and deduplicated by
/// their pair of truth sets, which is exact because each static operator
/// depends only on the truth sets of its operands.
TruthPreservation verify_truth_preservation_up_to(const PMorphism& p, const std::vector<std::string>& atoms,
                                                  int depth);

/// First surjective p-morphism in lexicographic order of the map, or none.
/// Throws Error when the source exceeds `bound` worlds or the target is
/// larger than the source.
std::optional<PMorphism> find_surjective_pmorphism(const GeneralModel& m1, const GeneralModel& m2,
                                                   std::size_t bound = 6);

/// ρ∘π. Throws Error when π's target size differs from ρ's source size.
PMorphism compose(const PMorphism& pi, const PMorphism& rho);

}  // namespace evlogic
