#include "evlogic/dynamics.hpp"

#include <algorithm>

#include "evlogic/error.hpp"
#include "evlogic/scenario.hpp"

namespace evlogic {

std::string to_string(UpdateKind kind) {
  switch (kind) {
    case UpdateKind::Add: return "add";
    case UpdateKind::AddClosed: return "add_closed";
    case UpdateKind::PlausibilityCut: return "plausibility_cut";
  }
  return "add";
}

namespace {

void check_payload(const EvidenceModel& m, const WorldSet& x) {
  if (x.empty()) throw ModelError("empty evidence");
  if (!x.subset_of(m.universe())) throw ModelError("evidence set outside W");
}

}  // namespace

EvidenceModel add_evidence(const EvidenceModel& m, const WorldSet& x) {
  check_payload(m, x);
  EvidenceModel out = m;
  for (auto& fam : out.evidence) {
    auto pos = std::lower_bound(fam.begin(), fam.end(), x);
    if (pos == fam.end() || *pos != x) fam.insert(pos, x);
  }
  return out;
}

GeneralModel add_evidence_closed(const GeneralModel& m, const WorldSet& x) {
  check_payload(m.base, x);
  const Relation order = m.plausibility ? *m.plausibility : derived_plausibility(m.base);
  GeneralModel out = m;
  out.base = add_evidence(m.base, upward_closure(order, x));
  return out;
}

Relation cut_plausibility(const Relation& order, const WorldSet& x) {
  Relation out = order;
  x.for_each([&](World w) {
    if (w < out.size()) out.successors(w) &= x;
  });
  return out;
}

HarmonyResult harmony(const EvidenceModel& m, const WorldSet& x) {
  check_payload(m, x);
  HarmonyResult r;
  r.cut = cut_plausibility(derived_plausibility(m), x);
  r.derived = derived_plausibility(add_evidence(m, x));
  r.holds = r.cut == r.derived;
  return r;
}

bool harmony_check(const EvidenceModel& m, const WorldSet& x) { return harmony(m, x).holds; }

UpdateRecord record_add(const GeneralModel& m, const WorldSet& x) {
  UpdateRecord r;
  r.kind = UpdateKind::Add;
  r.payload = x;
  r.before = m;
  r.after = m;
  r.after.base = add_evidence(m.base, x);
  return r;
}

UpdateRecord record_add_closed(const GeneralModel& m, const WorldSet& x) {
  UpdateRecord r;
  r.kind = UpdateKind::AddClosed;
  r.before = m;
  r.after = add_evidence_closed(m, x);
  r.payload = upward_closure(m.plausibility ? *m.plausibility : derived_plausibility(m.base), x);
  return r;
}

UpdateRecord record_cut(const GeneralModel& m, const WorldSet& x) {
  UpdateRecord r;
  r.kind = UpdateKind::PlausibilityCut;
  r.payload = x;
  r.before = m;
  r.after = m;
  r.after.plausibility = cut_plausibility(m.plausibility ? *m.plausibility : derived_plausibility(m.base), x);
  return r;
}

}  // namespace evlogic
