#include "evlogic/scenario.hpp"

#include "evlogic/error.hpp"

namespace evlogic {

namespace {

void check_world(const EvidenceModel& m, World w) {
  if (w >= m.size()) throw ModelError("unknown world index " + std::to_string(w));
}

// star(p) as a bitset over the indices of `sets`.
WorldSet star(const Family& sets, World p) {
  WorldSet s;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].contains(p)) s.insert(i);
  return s;
}

void check_family_size(const Family& sets) {
  if (sets.size() > kMaxWorlds) throw Error("too many distinct evidence sets");
}

}  // namespace

bool has_fip(const Family& sets) {
  if (sets.empty()) return true;
  WorldSet acc = sets.front();
  for (const auto& x : sets) acc &= x;
  return !acc.empty();
}

// A subfamily has the fip relative to x iff some point of x lies in all of
// its members, so the maximal ones are the inclusion-maximal stars
// {Y : p ∈ Y} for p ∈ x.
std::vector<Family> maximal_fip_families(const Family& sets_in, const WorldSet& x) {
  Family sets = normalized(sets_in);
  check_family_size(sets);
  std::vector<Family> out;
  if (x.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<WorldSet> stars;
  x.for_each([&](World p) {
    const WorldSet s = star(sets, p);
    for (auto t : stars)
      if (t == s) return;
    stars.push_back(s);
  });
  for (std::size_t i = 0; i < stars.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < stars.size() && maximal; ++j)
      if (j != i && stars[i].subset_of(stars[j])) maximal = false;  // stars are distinct
    if (!maximal) continue;
    Family fam;
    for (std::size_t k = 0; k < sets.size(); ++k)
      if (stars[i].contains(k)) fam.push_back(sets[k]);
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<WorldSet> maximal_fip_meets(const Family& sets, const WorldSet& x) {
  std::vector<WorldSet> out;
  for (const auto& fam : maximal_fip_families(sets, x)) {
    WorldSet m = x;
    for (const auto& y : fam) m &= y;
    out.push_back(m);
  }
  return out;
}

WorldSet maximal_fip_points(const Family& sets, const WorldSet& x) {
  check_family_size(sets);
  // v is in some maximal meet iff star(v) is itself maximal among stars of x.
  std::vector<std::pair<World, WorldSet>> stars;
  x.for_each([&](World p) { stars.emplace_back(p, star(sets, p)); });
  WorldSet out;
  for (const auto& [p, s] : stars) {
    bool maximal = true;
    for (const auto& [q, t] : stars)
      if (s != t && s.subset_of(t)) {
        maximal = false;
        break;
      }
    if (maximal) out.insert(p);
  }
  return out;
}

std::vector<Scenario> scenarios(const EvidenceModel& m, World w) {
  check_world(m, w);
  const WorldSet u = m.universe();
  std::vector<Scenario> out;
  for (auto& fam : maximal_fip_families(m.evidence[w], u)) {
    Scenario s;
    s.anchor = w;
    s.meet = meet(fam, u);
    s.family = std::move(fam);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RelativizedScenario> relative_scenarios(const EvidenceModel& m, World w, const WorldSet& x) {
  check_world(m, w);
  const WorldSet u = m.universe();
  if (!x.subset_of(u)) throw ModelError("restriction is not a set of worlds");
  std::vector<RelativizedScenario> out;
  for (auto& fam : maximal_fip_families(m.evidence[w], x)) {
    RelativizedScenario s;
    s.anchor = w;
    s.restriction = x;
    s.meet = meet(fam, u) & x;
    s.family = std::move(fam);
    out.push_back(std::move(s));
  }
  return out;
}

Relation derived_belief(const EvidenceModel& m) {
  const std::size_t n = m.size();
  const WorldSet u = m.universe();
  Relation r(n);
  for (World w = 0; w < n; ++w) {
    if (w > 0 && m.evidence[w] == m.evidence[w - 1]) {
      r.successors(w) = r.successors(w - 1);
      continue;
    }
    r.successors(w) = maximal_fip_points(m.evidence[w], u);
  }
  return r;
}

Relation derived_plausibility(const EvidenceModel& m) {
  const std::size_t n = m.size();
  const Family sets = m.all_evidence_sets();
  Relation r(n);
  for (World w = 0; w < n; ++w) {
    WorldSet c = m.universe();
    for (const auto& x : sets)
      if (x.contains(w)) c &= x;
    r.successors(w) = c;
  }
  return r;
}

Family reliable_evidence(const EvidenceModel& m, World w) {
  check_world(m, w);
  Family out;
  for (const auto& x : m.evidence[w])
    if (x.contains(w)) out.push_back(x);
  return out;
}

Family unreliable_evidence(const EvidenceModel& m, World w) {
  check_world(m, w);
  Family out;
  for (const auto& x : m.evidence[w])
    if (!x.contains(w)) out.push_back(x);
  return out;
}

GeneralModel lift(const EvidenceModel& m) {
  GeneralModel g;
  g.base = m;
  g.belief = derived_belief(m);
  g.plausibility = derived_plausibility(m);
  return g;
}

}  // namespace evlogic
