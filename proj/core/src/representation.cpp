#include "evlogic/representation.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "evlogic/error.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/semantics.hpp"

namespace evlogic {

std::string to_string(RepLogic logic) { return logic == RepLogic::Flat ? "flat" : "concise"; }

RepLogic rep_logic_from_string(const std::string& s) {
  if (s == "flat") return RepLogic::Flat;
  if (s == "concise") return RepLogic::Concise;
  throw Error("unknown logic '" + s + "' (expected flat or concise)");
}

namespace {

GeneralModel with_relations(const GeneralModel& m) {
  GeneralModel out = m;
  if (!out.belief) out.belief = derived_belief(m.base);
  if (!out.plausibility) out.plausibility = derived_plausibility(m.base);
  return out;
}

std::uint64_t up_mask(const Relation& order, World w) { return order.successors(w).mask(); }

bool agree(std::uint64_t f, std::uint64_t g, std::uint64_t mask) { return ((f ^ g) & mask) == 0; }

std::string rep_name(const GeneralModel& m, const RepWorld& r, bool concise) {
  std::string bits;
  for (World u = 0; u < m.size(); ++u) bits += ((r.labeling >> u) & 1U) ? '1' : '0';
  return "(" + m.base.names[r.base] + "," + (concise ? std::string("0") : m.base.names[r.tag]) + "," + bits + ")";
}

// Shared tail: names, valuation pullback, p-morphism from the lifted rep.
std::pair<RepModel, PMorphism> finish(RepModel rep, const GeneralModel& m) {
  const bool concise = rep.logic == RepLogic::Concise;
  rep.model.names.clear();
  for (const auto& r : rep.worlds) rep.model.names.push_back(rep_name(m, r, concise));
  for (const auto& [atom, s] : m.base.valuation) {
    WorldSet pulled;
    for (World i = 0; i < rep.worlds.size(); ++i)
      if (s.contains(rep.worlds[i].base)) pulled.insert(i);
    rep.model.valuation[atom] = pulled;
  }
  PMorphism p{lift(rep.model), m, rep.projection};
  return {std::move(rep), std::move(p)};
}

void check_valid(const GeneralModel& m) {
  const ClassReport r = validate(m);
  if (!r.valid) throw ModelError("representation needs a valid model: " + r.violations.front().detail);
}

}  // namespace

std::pair<RepModel, PMorphism> build_flat_representation(const GeneralModel& input) {
  const GeneralModel m = with_relations(input);
  check_valid(m);
  if (!is_flat(m)) throw ModelError("flat representation needs a flat model");
  const std::size_t n = m.size();
  const Relation& order = *m.plausibility;
  const Relation& belief = *m.belief;
  const WorldSet tags = belief.range();
  if (tags.empty()) throw ModelError("flat representation needs a nonempty B[W]");
  if (n > 6) throw ModelError("representation is limited to 6 worlds");
  const std::uint64_t labelings = std::uint64_t{1} << n;
  const std::vector<World> tag_list = tags.to_vector();
  const std::size_t size = n * tag_list.size() * labelings;
  if (size > kMaxWorlds) throw ModelError("representation would have " + std::to_string(size) + " worlds");

  RepModel rep;
  rep.logic = RepLogic::Flat;
  rep.tags = tags;
  std::vector<std::size_t> tag_pos(n, 0);
  for (std::size_t i = 0; i < tag_list.size(); ++i) tag_pos[tag_list[i]] = i;
  auto index = [&](World w, World x, std::uint64_t f) { return (w * tag_list.size() + tag_pos[x]) * labelings + f; };
  for (World w = 0; w < n; ++w)
    for (World x : tag_list)
      for (std::uint64_t f = 0; f < labelings; ++f) {
        rep.worlds.push_back({w, x, f});
        rep.projection.push_back(w);
      }
  const WorldSet all = WorldSet::full(size);

  // X^f(v) = {(u, v, g) : u ∈ X, g↾↑u = f↾↑u}
  auto lifted = [&](const WorldSet& x, std::uint64_t f, World v) {
    WorldSet out;
    x.for_each([&](World u) {
      for (std::uint64_t g = 0; g < labelings; ++g)
        if (agree(f, g, up_mask(order, u))) out.insert(index(u, v, g));
    });
    return out;
  };

  rep.model.names.assign(size, "");
  rep.model.evidence.assign(size, Family{});
  // E▽(w, x, f) depends on (w, f) only.
  for (World w = 0; w < n; ++w)
    for (std::uint64_t f = 0; f < labelings; ++f) {
      Family fam{all};
      belief.successors(w).for_each([&](World v) {
        for (const auto& x : m.base.evidence[w]) {
          if (!x.contains(v)) continue;
          for (std::uint64_t g = 0; g < labelings; ++g)
            if (agree(f, g, up_mask(order, v))) fam.push_back(lifted(x, g, v));
        }
      });
      normalize(fam);
      for (World x : tag_list) rep.model.evidence[index(w, x, f)] = fam;
    }

  rep.order = Relation(size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const RepWorld& r = rep.worlds[a];
      const RepWorld& s = rep.worlds[b];
      if (order.contains(r.base, s.base) && r.tag == s.tag && agree(r.labeling, s.labeling, up_mask(order, s.base)))
        rep.order.add(a, b);
    }
  return finish(std::move(rep), m);
}

std::pair<RepModel, PMorphism> build_concise_representation(const GeneralModel& input) {
  const GeneralModel m = with_relations(input);
  check_valid(m);
  if (!is_concise(m)) throw ModelError("concise representation needs a concise model");
  const std::size_t n = m.size();
  if (n > 6) throw ModelError("representation is limited to 6 worlds");
  const Relation& order = *m.plausibility;
  const std::uint64_t labelings = std::uint64_t{1} << n;
  const std::size_t size = n * labelings;
  if (size > kMaxWorlds) throw ModelError("representation would have " + std::to_string(size) + " worlds");

  RepModel rep;
  rep.logic = RepLogic::Concise;
  rep.tags = WorldSet{0};
  for (World w = 0; w < n; ++w)
    for (std::uint64_t f = 0; f < labelings; ++f) {
      rep.worlds.push_back({w, 0, f});
      rep.projection.push_back(w);
    }
  auto index = [&](World w, std::uint64_t f) { return w * labelings + f; };

  // X^g(0) = {(w, 0, h) : w ∈ X, h↾↑w = g↾↑w}
  Family fam{WorldSet::full(size)};
  for (const auto& x : m.base.evidence[0])
    for (std::uint64_t g = 0; g < labelings; ++g) {
      WorldSet s;
      x.for_each([&](World w) {
        for (std::uint64_t h = 0; h < labelings; ++h)
          if (agree(g, h, up_mask(order, w))) s.insert(index(w, h));
      });
      fam.push_back(s);
    }
  rep.model.names.assign(size, "");
  rep.model.set_uniform_evidence(fam);

  rep.order = Relation(size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const RepWorld& r = rep.worlds[a];
      const RepWorld& s = rep.worlds[b];
      if (order.contains(r.base, s.base) && agree(r.labeling, s.labeling, up_mask(order, s.base))) rep.order.add(a, b);
    }
  return finish(std::move(rep), m);
}

std::pair<RepModel, PMorphism> build_representation(const GeneralModel& m, RepLogic logic) {
  return logic == RepLogic::Flat ? build_flat_representation(m) : build_concise_representation(m);
}

bool verify_plausibility_identity(const RepModel& rep) { return derived_plausibility(rep.model) == rep.order; }

ScenarioCheck verify_scenario_structure(const RepModel& rep, const GeneralModel& input,
                                        const std::vector<World>& sample) {
  const GeneralModel m = with_relations(input);
  const Relation& order = *m.plausibility;
  const std::size_t n = m.size();
  const std::uint64_t labelings = std::uint64_t{1} << n;
  const WorldSet all = rep.model.universe();
  ScenarioCheck out;

  auto project = [&](const WorldSet& s) {
    WorldSet img;
    s.for_each([&](World i) { img.insert(rep.projection[i]); });
    return img;
  };
  // The candidate families {W▽} ∪ E^v(r) for each v with w B v, and the
  // upsets they must project onto. Only flat reps carry E^v; a concise rep
  // has one uniform family whose scenarios are checked against ↑v for the
  // maximal (believed) v.
  std::map<std::tuple<World, World, std::uint64_t>, World> lookup;
  for (World j = 0; j < rep.worlds.size(); ++j)
    lookup[{rep.worlds[j].base, rep.worlds[j].tag, rep.worlds[j].labeling}] = j;
  std::vector<World> worlds = sample;
  if (worlds.empty())
    for (World i = 0; i < rep.worlds.size(); ++i) worlds.push_back(i);

  for (World i : worlds) {
    ++out.checked;
    const RepWorld& r = rep.worlds[i];
    const auto scs = scenarios(rep.model, i);
    std::vector<std::pair<World, Family>> expected;
    if (rep.logic == RepLogic::Flat) {
      m.belief->successors(r.base).for_each([&](World v) {
        Family fam{all};
        for (const auto& x : m.base.evidence[r.base]) {
          if (!x.contains(v)) continue;
          for (std::uint64_t g = 0; g < labelings; ++g) {
            if (!agree(r.labeling, g, up_mask(order, v))) continue;
            WorldSet s;
            x.for_each([&](World u) {
              for (std::uint64_t h = 0; h < labelings; ++h)
                if (agree(g, h, up_mask(order, u))) s.insert(lookup.at({u, v, h}));
            });
            fam.push_back(s);
          }
        }
        normalize(fam);
        expected.emplace_back(v, std::move(fam));
      });
    }
    for (const auto& sc : scs) {
      const WorldSet img = project(sc.meet);
      bool matched = false;
      if (rep.logic == RepLogic::Flat) {
        for (const auto& [v, fam] : expected)
          if (fam == normalized(sc.family) && img == order.successors(v)) {
            matched = true;
            break;
          }
      } else {
        m.belief->successors(0).for_each([&](World v) {
          if (img == order.successors(v)) matched = true;
        });
      }
      if (!matched) {
        out.holds = false;
        out.rep_world = i;
        out.detail = "scenario at " + rep.model.names[i] + " does not match any E^v with projection ↑v";
        return out;
      }
    }
  }
  return out;
}

RepresentationReport verify_representation(const GeneralModel& input, RepLogic logic, int depth,
                                           std::size_t max_worlds) {
  if (input.size() > max_worlds)
    throw Error("verify_representation is bounded to " + std::to_string(max_worlds) + " worlds");
  const GeneralModel m = with_relations(input);
  auto [rep, pi] = build_representation(m, logic);
  RepresentationReport out;
  out.logic = logic;
  out.rep_size = rep.worlds.size();
  const std::size_t n = m.size();
  const std::size_t expected =
      logic == RepLogic::Flat ? n * m.belief->range().size() << n : n << n;
  out.size_law = out.rep_size == expected;
  out.pmorphism = check_pmorphism(pi);
  std::vector<std::string> atoms;
  for (const auto& [a, s] : m.base.valuation) atoms.push_back(a);
  out.truth = verify_truth_preservation_up_to(pi, atoms, depth);
  out.plausibility_identity = verify_plausibility_identity(rep);
  out.scenarios = verify_scenario_structure(rep, m);
  out.rep_class = validate(pi.source);
  out.passed = out.size_law && out.pmorphism.passed() && out.pmorphism.surjective && out.truth.holds &&
               out.plausibility_identity && out.scenarios.holds && out.rep_class.valid;
  return out;
}

FiltrationQuotient filtrate(const GeneralModel& input, const Formula& pivot) {
  if (!is_basic(pivot)) throw SignatureError("filtration pivots must be basic static formulas: " + render(pivot));
  if (pivot.has_meta()) throw SignatureError("filtration pivot contains metavariables");
  FiltrationQuotient q;
  q.source = with_relations(input);
  q.pivot = pivot;
  q.subformulas = subformulas(pivot);
  const GeneralModel& m = q.source;
  const std::size_t n = m.size();
  Evaluator ev(m, Mode::Explicit);
  std::vector<WorldSet> truth;
  for (const auto& f : q.subformulas) truth.push_back(ev.truth_set(f));
  const WorldSet maxw = maximal_worlds(*m.plausibility);

  std::map<std::vector<bool>, World> key_to_class;
  q.class_map.assign(n, 0);
  for (World w = 0; w < n; ++w) {
    std::vector<bool> key;
    for (const auto& t : truth) key.push_back(t.contains(w));
    key.push_back(maxw.contains(w));
    auto [it, fresh] = key_to_class.emplace(key, q.classes.size());
    if (fresh) q.classes.emplace_back();
    q.classes[it->second].insert(w);
    q.class_map[w] = it->second;
  }
  const std::size_t k = q.classes.size();
  auto image = [&](const WorldSet& s) {
    WorldSet out;
    s.for_each([&](World w) { out.insert(q.class_map[w]); });
    return out;
  };

  EvidenceModel& e = q.quotient.base;
  for (const auto& c : q.classes) {
    std::string name = "[";
    bool first = true;
    c.for_each([&](World w) {
      if (!first) name += ",";
      first = false;
      name += m.base.names[w];
    });
    e.names.push_back(name + "]");
  }
  e.evidence.assign(k, Family{});
  Relation belief(k), order(k);
  for (World w = 0; w < n; ++w) {
    const World c = q.class_map[w];
    for (const auto& y : m.base.evidence[w]) e.evidence[c].push_back(image(y));
    m.belief->successors(w).for_each([&](World v) { belief.add(c, q.class_map[v]); });
    m.plausibility->successors(w).for_each([&](World v) { order.add(c, q.class_map[v]); });
  }
  for (auto& fam : e.evidence) normalize(fam);
  for (const auto& a : atoms_of(pivot)) e.valuation[a] = image(m.base.atom(a) & m.universe());
  q.quotient.belief = belief;
  q.quotient.plausibility = order;
  q.report = validate(q.quotient);
  return q;
}

FiltrationTruth filtration_preserves_truth(const FiltrationQuotient& q) {
  Evaluator src(q.source, Mode::Explicit);
  Evaluator quo(q.quotient, Mode::Explicit);
  FiltrationTruth out;
  for (const auto& f : q.subformulas) {
    const WorldSet s = src.truth_set(f);
    const WorldSet t = quo.truth_set(f);
    for (World w = 0; w < q.source.size(); ++w)
      if (s.contains(w) != t.contains(q.class_map[w])) {
        out.holds = false;
        out.formula = f;
        out.world = w;
        return out;
      }
  }
  return out;
}

}  // namespace evlogic
