#pragma once

#include <vector>

#include "evlogic/model.hpp"
#include "evlogic/world_set.hpp"

namespace evlogic {

/// A maximal subfamily of E(anchor) with the finite intersection property.
struct Scenario {
  World anchor = 0;
  Family family;
  WorldSet meet;  // ⋂family
};

/// A maximal subfamily of E(anchor) whose restriction to `restriction` has
/// the finite intersection property.
struct RelativizedScenario {
  World anchor = 0;
  WorldSet restriction;
  Family family;
  WorldSet meet;  // ⋂family ∩ restriction
};

/// On finite ground sets: the empty family, or a family with nonempty meet.
bool has_fip(const Family& sets);

/// Maximal subfamilies of `sets` whose restriction to `x` has the fip, in
/// increasing order of their lowest witness point. For x = ∅ this is the
/// single empty family.
std::vector<Family> maximal_fip_families(const Family& sets, const WorldSet& x);

/// The relativized meets ⋂𝒳 ∩ x of those families, pairwise disjoint,
/// in the same order.
std::vector<WorldSet> maximal_fip_meets(const Family& sets, const WorldSet& x);

/// Union of the relativized meets of all maximal families, computed
/// without materializing them.
WorldSet maximal_fip_points(const Family& sets, const WorldSet& x);

std::vector<Scenario> scenarios(const EvidenceModel& m, World w);
std::vector<RelativizedScenario> relative_scenarios(const EvidenceModel& m, World w, const WorldSet& x);

/// w B_E v iff v lies in the meet of some w-scenario.
Relation derived_belief(const EvidenceModel& m);
/// Specialization preorder: w ≼_E v iff every evidence set containing w
/// contains v.
Relation derived_plausibility(const EvidenceModel& m);

/// {X ∈ E(w) : w ∈ X}
Family reliable_evidence(const EvidenceModel& m, World w);
/// {X ∈ E(w) : w ∉ X}
Family unreliable_evidence(const EvidenceModel& m, World w);

/// The intended model: evidence unchanged, B and ≼ derived.
GeneralModel lift(const EvidenceModel& m);

}  // namespace evlogic
