#pragma once

#include <string>

#include "evlogic/model.hpp"

namespace evlogic {

enum class UpdateKind { Add, AddClosed, PlausibilityCut };

std::string to_string(UpdateKind kind);

/// Audit record of one evidence change.
struct UpdateRecord {
  UpdateKind kind = UpdateKind::Add;
  WorldSet payload;  // the set actually added or cut along
  GeneralModel before;
  GeneralModel after;
};

/// E(w) ∪ {x} at every world. Throws ModelError on an empty x.
EvidenceModel add_evidence(const EvidenceModel& m, const WorldSet& x);

/// Adds the ≼-upward closure of x at every world; relations are kept.
/// Uses the derived order when the model carries none.
GeneralModel add_evidence_closed(const GeneralModel& m, const WorldSet& x);

/// ≼ minus {(w, v) : w ∈ x, v ∉ x}.
Relation cut_plausibility(const Relation& order, const WorldSet& x);

struct HarmonyResult {
  bool holds = false;
  Relation cut;      // cut_plausibility(≼_E, x)
  Relation derived;  // ≼ of the model with x added
};

/// Compares cutting the derived order along x with deriving the order
/// after adding x. Throws ModelError on an empty x.
HarmonyResult harmony(const EvidenceModel& m, const WorldSet& x);
bool harmony_check(const EvidenceModel& m, const WorldSet& x);

UpdateRecord record_add(const GeneralModel& m, const WorldSet& x);
UpdateRecord record_add_closed(const GeneralModel& m, const WorldSet& x);
UpdateRecord record_cut(const GeneralModel& m, const WorldSet& x);

}  // namespace evlogic
