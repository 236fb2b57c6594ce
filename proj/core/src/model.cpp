#include "evlogic/model.hpp"

#include <algorithm>

#include "evlogic/error.hpp"
#include "evlogic/scenario.hpp"

namespace evlogic {

EvidenceModel::EvidenceModel(std::size_t n) {
  if (n == 0 || n > kMaxWorlds) throw ModelError("world count out of range");
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  evidence.assign(n, Family{WorldSet::full(n)});
}

World EvidenceModel::index_of(const std::string& name) const {
  for (World w = 0; w < names.size(); ++w)
    if (names[w] == name) return w;
  throw ModelError("unknown world '" + name + "'");
}

WorldSet EvidenceModel::atom(const std::string& name) const {
  auto it = valuation.find(name);
  return it == valuation.end() ? WorldSet{} : it->second;
}

bool EvidenceModel::evidence_uniform() const {
  for (std::size_t w = 1; w < evidence.size(); ++w)
    if (evidence[w] != evidence[0]) return false;
  return true;
}

void EvidenceModel::set_uniform_evidence(Family family) {
  normalize(family);
  evidence.assign(size(), family);
}

Family EvidenceModel::all_evidence_sets() const {
  Family out;
  for (const auto& fam : evidence) out.insert(out.end(), fam.begin(), fam.end());
  normalize(out);
  return out;
}

namespace {

std::string set_str(const EvidenceModel& m, const WorldSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](World w) {
    if (!first) out += ",";
    first = false;
    out += w < m.size() ? m.names[w] : std::to_string(w);
  });
  return out + "}";
}

// Relations used for checking: stored ones, derived ones where missing.
struct Relations {
  Relation belief;
  Relation plausibility;
  bool derived = false;
};

Relations relations_of(const GeneralModel& m) {
  Relations r;
  if (m.belief) {
    r.belief = *m.belief;
  } else {
    r.belief = derived_belief(m.base);
    r.derived = true;
  }
  if (m.plausibility) {
    r.plausibility = *m.plausibility;
  } else {
    r.plausibility = derived_plausibility(m.base);
    r.derived = true;
  }
  return r;
}

bool flat_with(const GeneralModel& m, const Relation& belief) {
  for (World w = 0; w < m.size(); ++w)
    for (const auto& x : m.base.evidence[w])
      if (!x.intersects(belief.successors(w))) return false;
  return true;
}

bool uniform_with(const GeneralModel& m, const Relation& belief, const Relation& order) {
  if (!m.base.evidence_uniform()) return false;
  for (World w = 1; w < m.size(); ++w)
    if (belief.successors(w) != belief.successors(0)) return false;
  return m.size() == 0 || belief.successors(0).subset_of(maximal_worlds(order));
}

bool concise_with(const GeneralModel& m, const Relation& belief, const Relation& order) {
  return flat_with(m, belief) && uniform_with(m, belief, order) &&
         (m.size() == 0 || maximal_worlds(order).subset_of(belief.successors(0)));
}

}  // namespace

ClassReport validate(const GeneralModel& m) {
  ClassReport rep;
  const EvidenceModel& e = m.base;
  const std::size_t n = e.size();
  const WorldSet u = e.universe();
  auto violate = [&](std::string rule, std::vector<World> tuple, std::string detail) {
    rep.valid = false;
    rep.violations.push_back({std::move(rule), std::move(tuple), std::move(detail)});
  };
  if (n == 0) {
    violate("worlds", {}, "model has no worlds");
    return rep;
  }
  if (e.evidence.size() != n) {
    violate("worlds", {}, "evidence map does not cover the worlds");
    return rep;
  }
  for (World w = 0; w < n; ++w) {
    bool has_full = false;
    for (const auto& x : e.evidence[w]) {
      if (x.empty()) violate("constraint 1", {w}, "empty evidence set at " + e.names[w]);
      if (!x.subset_of(u)) violate("constraint 1", {w}, "evidence set outside W at " + e.names[w]);
      if (x == u) has_full = true;
    }
    if (!has_full) violate("constraint 1", {w}, "W missing from E(" + e.names[w] + ")");
  }
  for (const auto& [atom, s] : e.valuation)
    if (!s.subset_of(u)) violate("valuation", {}, "V(" + atom + ") outside W");

  const Relations r = relations_of(m);
  rep.relations_derived = r.derived;
  const Relation& order = r.plausibility;
  const Relation& belief = r.belief;
  if (order.size() != n || belief.size() != n) {
    violate("relations", {}, "relation size does not match the world count");
    return rep;
  }
  for (World w = 0; w < n; ++w)
    if (!order.contains(w, w)) violate("preorder", {w}, "plausibility not reflexive at " + e.names[w]);
  for (World a = 0; a < n; ++a)
    order.successors(a).for_each([&](World b) {
      order.successors(b).for_each([&](World c) {
        if (!order.contains(a, c))
          violate("preorder", {a, b, c},
                  "plausibility not transitive at (" + e.names[a] + "," + e.names[b] + "," + e.names[c] + ")");
      });
    });
  for (World w = 0; w < n; ++w)
    order.successors(w).for_each([&](World v) {
      for (World x_owner = 0; x_owner < n; ++x_owner)
        for (const auto& x : e.evidence[x_owner])
          if (x.contains(w) && !x.contains(v))
            violate("constraint 2", {w, v, x_owner},
                    e.names[w] + " <= " + e.names[v] + " but " + set_str(e, x) + " in E(" + e.names[x_owner] +
                        ") is not upward closed");
    });
  for (World a = 0; a < n; ++a)
    belief.successors(a).for_each([&](World w) {
      order.successors(w).for_each([&](World v) {
        if (!belief.contains(a, v))
          violate("constraint 3", {a, w, v},
                  e.names[a] + " B " + e.names[w] + " and " + e.names[w] + " <= " + e.names[v] + " but not " +
                      e.names[a] + " B " + e.names[v]);
      });
    });
  rep.flat = flat_with(m, belief);
  rep.uniform = uniform_with(m, belief, order);
  rep.concise = rep.flat && rep.uniform && maximal_worlds(order).subset_of(belief.successors(0));
  return rep;
}

bool is_flat(const GeneralModel& m) { return flat_with(m, relations_of(m).belief); }

bool is_uniform(const GeneralModel& m) {
  const Relations r = relations_of(m);
  return uniform_with(m, r.belief, r.plausibility);
}

bool is_concise(const GeneralModel& m) {
  const Relations r = relations_of(m);
  return concise_with(m, r.belief, r.plausibility);
}

WorldSet upset(const Relation& order, World w) {
  if (w >= order.size()) throw ModelError("unknown world index " + std::to_string(w));
  return order.successors(w);
}

WorldSet upset(const GeneralModel& m, World w) {
  if (!m.plausibility) throw ModelError("model has no plausibility relation");
  return upset(*m.plausibility, w);
}

WorldSet upward_closure(const Relation& order, const WorldSet& x) {
  WorldSet out;
  x.for_each([&](World w) { out |= order.successors(w); });
  return out;
}

WorldSet maximal_worlds(const Relation& order) {
  WorldSet out;
  for (World w = 0; w < order.size(); ++w) {
    bool maximal = true;
    order.successors(w).for_each([&](World v) {
      if (!order.contains(v, w)) maximal = false;
    });
    if (maximal) out.insert(w);
  }
  return out;
}

WorldSet maximal_worlds(const GeneralModel& m) {
  if (!m.plausibility) return maximal_worlds(derived_plausibility(m.base));
  return maximal_worlds(*m.plausibility);
}

bool is_directed(const Relation& order, const WorldSet& d) {
  const auto members = d.to_vector();
  for (World a : members)
    for (World b : members) {
      const WorldSet bounds = order.successors(a) & order.successors(b) & d;
      if (bounds.empty()) return false;
    }
  return true;
}

bool has_boundedness(const Relation& order) {
  const std::size_t n = order.size();
  if (n > 16) throw Error("boundedness check limited to 16 worlds");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const WorldSet d = WorldSet::from_mask(mask);
    if (!is_directed(order, d)) continue;
    WorldSet bounds = WorldSet::full(n);
    d.for_each([&](World w) { bounds &= order.successors(w); });
    if (bounds.empty()) return false;
  }
  return true;
}

std::string to_string(ModelClass c) {
  switch (c) {
    case ModelClass::All: return "all";
    case ModelClass::Flat: return "flat";
    case ModelClass::Uniform: return "uniform";
    case ModelClass::Concise: return "concise";
    case ModelClass::Intended: return "intended";
  }
  return "all";
}

ModelClass model_class_from_string(const std::string& s) {
  if (s == "all") return ModelClass::All;
  if (s == "flat") return ModelClass::Flat;
  if (s == "uniform") return ModelClass::Uniform;
  if (s == "concise") return ModelClass::Concise;
  if (s == "intended") return ModelClass::Intended;
  throw Error("unknown model class '" + s + "'");
}

}  // namespace evlogic
