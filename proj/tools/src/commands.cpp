#include "commands.hpp"

#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "evlogic/dynamics.hpp"
#include "evlogic/error.hpp"
#include "evlogic/formula.hpp"
#include "evlogic/model.hpp"
#include "evlogic/morphism.hpp"
#include "evlogic/representation.hpp"
#include "evlogic/scenario.hpp"
#include "evlogic/semantics.hpp"
#include "evlogic/validity.hpp"

namespace evlogic::cli {

namespace {

using Json = nlohmann::ordered_json;

Format format_of(const Shared& s) {
  if (s.format == "json") return Format::Json;
  if (s.format == "dot") return Format::Dot;
  return Format::Text;
}

Json envelope(const std::string& command) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

GeneralModel load(const Shared& s, const std::string& path) {
  LoadOptions opt;
  opt.strict = s.strict;
  return load_model(path, opt);
}

/// The model with the relations [B] and [P] read in the requested mode.
GeneralModel in_mode(const Shared& s, const GeneralModel& g) {
  return mode_from_string(s.mode) == Mode::Intended ? lift(g.base) : g;
}

std::string set_text(const EvidenceModel& m, const WorldSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](World w) {
    if (!first) out += ",";
    first = false;
    out += m.names[w];
  });
  return out + "}";
}

Json set_json(const EvidenceModel& m, const WorldSet& s) {
  Json arr = Json::array();
  s.for_each([&](World w) { arr.push_back(m.names[w]); });
  return arr;
}

std::string family_text(const EvidenceModel& m, const Family& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + set_text(m, f[i]);
  return out + "}";
}

Json family_json(const EvidenceModel& m, const Family& f) {
  Json arr = Json::array();
  for (const auto& x : f) arr.push_back(set_json(m, x));
  return arr;
}

std::string relation_text(const EvidenceModel& m, const Relation& r) {
  std::string out;
  for (auto [a, b] : r.pairs()) out += (out.empty() ? "" : " ") + m.names[a] + "->" + m.names[b];
  return out.empty() ? "(empty)" : out;
}

Json relation_json(const EvidenceModel& m, const Relation& r) {
  Json arr = Json::array();
  for (auto [a, b] : r.pairs()) arr.push_back(Json::array({m.names[a], m.names[b]}));
  return arr;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot(const EvidenceModel& m, const Relation* belief, const Relation* order) {
  std::cout << "digraph model {\n";
  for (World w = 0; w < m.size(); ++w) {
    std::string label = quote(m.names[w]);
    label.pop_back();
    for (const auto& [atom, s] : m.valuation)
      if (s.contains(w)) label += "\\n" + atom;
    std::cout << "  " << quote(m.names[w]) << " [label=" << label << "\"];\n";
  }
  if (order)
    for (auto [a, b] : order->pairs())
      if (a != b) std::cout << "  " << quote(m.names[a]) << " -> " << quote(m.names[b]) << " [style=dashed];\n";
  if (belief)
    for (auto [a, b] : belief->pairs())
      std::cout << "  " << quote(m.names[a]) << " -> " << quote(m.names[b]) << " [color=blue];\n";
  std::cout << "}\n";
}

void no_dot(const Shared& s, const std::string& command) {
  if (format_of(s) == Format::Dot) throw Error(command + " has no dot output; use text or json");
}

Json report_json(const EvidenceModel& m, const ClassReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["flat"] = r.flat;
  j["uniform"] = r.uniform;
  j["concise"] = r.concise;
  j["relations_derived"] = r.relations_derived;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["rule"] = x.rule;
    Json t = Json::array();
    for (World w : x.tuple) t.push_back(m.names[w]);
    e["tuple"] = t;
    e["detail"] = x.detail;
    v.push_back(e);
  }
  j["violations"] = v;
  return j;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void report_text(const ClassReport& r) {
  std::cout << "valid: " << yes(r.valid) << "\n";
  for (const auto& v : r.violations) std::cout << "  " << v.rule << ": " << v.detail << "\n";
  std::cout << "flat: " << yes(r.flat) << "\nuniform: " << yes(r.uniform) << "\nconcise: " << yes(r.concise) << "\n";
  if (r.relations_derived) std::cout << "(no stored relations; derived ones were checked)\n";
}

Json counterexample_json(const Counterexample& cx) {
  Json j;
  j["world"] = cx.model.base.names[cx.world];
  j["instance"] = render(cx.instance);
  Json p = Json::array();
  for (const auto& f : cx.premises) p.push_back(render(f));
  j["premises"] = p;
  j["model"] = Json::parse(model_to_json(cx.model));
  return j;
}

Json sweep_json(const SweepResult& r) {
  Json j;
  j["name"] = r.name;
  j["class"] = to_string(r.cls);
  j["exploration"] = r.exploration;
  j["models"] = r.models;
  j["frames"] = r.frames;
  j["instances"] = r.instances;
  j["undefinable_failures"] = r.undefinable_failures;
  j["counterexample"] = r.counterexample ? counterexample_json(*r.counterexample) : Json(nullptr);
  return j;
}

std::string sweep_line(const SweepResult& r) {
  std::ostringstream out;
  out << r.name << " over " << to_string(r.cls) << (r.exploration ? " (exploration)" : "") << ": ";
  if (r.counterexample) {
    out << "counterexample at world " << r.counterexample->model.base.names[r.counterexample->world] << ": "
        << render(r.counterexample->instance);
  } else if (r.undefinable_failures > 0) {
    out << r.undefinable_failures << " failing set assignments without a definable instance";
  } else {
    out << "no counterexample within bounds (" << r.models << " models, " << r.instances << " instances)";
  }
  return out.str();
}

}  // namespace

int run_check(const Shared& s, const CheckArgs& a) {
  no_dot(s, "check");
  const GeneralModel g = load(s, a.model);
  const Formula f = parse(a.formula);
  Evaluator ev(g, mode_from_string(s.mode));
  const WorldSet t = ev.truth_set(f);
  const WorldSet u = ev.universe();
  const EvidenceModel& m = g.base;
  bool ok = t == u;
  std::string verdict;
  if (!a.world.empty()) {
    const World w = m.index_of(a.world);
    ok = t.contains(w);
    verdict = std::string(ok ? "true" : "false") + " at " + a.world;
  } else if (t == u) {
    verdict = "true at all worlds";
  } else if (t.empty()) {
    verdict = "false at all worlds";
  } else {
    verdict = "true at " + set_text(m, t) + "; false at " + set_text(m, u - t);
  }
  if (format_of(s) == Format::Json) {
    Json j = envelope("check");
    j["formula"] = render(f);
    j["mode"] = s.mode;
    j["true_at"] = set_json(m, t);
    j["false_at"] = set_json(m, u - t);
    if (!a.world.empty()) j["world"] = a.world;
    j["holds"] = ok;
    emit(j);
  } else {
    std::cout << verdict << "\n";
  }
  return ok ? 0 : 1;
}

int run_classify(const Shared& s, const std::string& path) {
  const GeneralModel g = load(s, path);
  const ClassReport r = validate(g);
  const GeneralModel derived = lift(g.base);
  const bool intended = g.has_relations() && *g.belief == *derived.belief && *g.plausibility == *derived.plausibility;
  if (format_of(s) == Format::Dot) {
    const GeneralModel& shown = g.has_relations() ? g : derived;
    dot(g.base, &*shown.belief, &*shown.plausibility);
  } else if (format_of(s) == Format::Json) {
    Json j = envelope("classify");
    j["report"] = report_json(g.base, r);
    j["relations_match_derived"] = g.has_relations() ? Json(intended) : Json(nullptr);
    emit(j);
  } else {
    report_text(r);
    if (g.has_relations()) std::cout << "stored relations equal the derived ones: " << yes(intended) << "\n";
  }
  return r.valid ? 0 : 1;
}

int run_scenarios(const Shared& s, const ScenarioArgs& a) {
  no_dot(s, "scenarios");
  const GeneralModel g = load(s, a.model);
  const EvidenceModel& m = g.base;
  std::optional<WorldSet> x;
  if (!a.relative_to.empty()) {
    Evaluator ev(g, mode_from_string(s.mode));
    x = ev.truth_set(parse(a.relative_to));
  }
  std::vector<World> worlds;
  if (!a.world.empty())
    worlds.push_back(m.index_of(a.world));
  else
    for (World w = 0; w < m.size(); ++w) worlds.push_back(w);
  Json out = Json::array();
  for (World w : worlds) {
    std::vector<std::pair<Family, WorldSet>> found;
    if (x) {
      for (const auto& sc : relative_scenarios(m, w, *x)) found.emplace_back(sc.family, sc.meet);
    } else {
      for (const auto& sc : scenarios(m, w)) found.emplace_back(sc.family, sc.meet);
    }
    if (format_of(s) == Format::Json) {
      Json jw;
      jw["world"] = m.names[w];
      Json list = Json::array();
      for (const auto& [fam, meet] : found) {
        Json e;
        e["family"] = family_json(m, fam);
        e["meet"] = set_json(m, meet);
        list.push_back(e);
      }
      jw["scenarios"] = list;
      out.push_back(jw);
    } else {
      std::cout << "world " << m.names[w] << ": " << found.size() << " scenario" << (found.size() == 1 ? "" : "s");
      if (x) std::cout << " relative to " << set_text(m, *x);
      std::cout << "\n";
      for (const auto& [fam, meet] : found)
        std::cout << "  " << family_text(m, fam) << "  meet " << set_text(m, meet) << "\n";
    }
  }
  if (format_of(s) == Format::Json) {
    Json j = envelope("scenarios");
    if (x) j["relative_to"] = set_json(m, *x);
    j["worlds"] = out;
    emit(j);
  }
  return 0;
}

int run_derive(const Shared& s, const std::string& path, const std::string& out) {
  const GeneralModel g = load(s, path);
  const GeneralModel lifted = lift(g.base);
  const EvidenceModel& m = g.base;
  if (!out.empty()) save_model(lifted, out);
  if (format_of(s) == Format::Dot) {
    dot(m, &*lifted.belief, &*lifted.plausibility);
  } else if (format_of(s) == Format::Json) {
    Json j = envelope("derive");
    j["belief"] = relation_json(m, *lifted.belief);
    j["plausibility"] = relation_json(m, *lifted.plausibility);
    j["maximal"] = set_json(m, maximal_worlds(*lifted.plausibility));
    emit(j);
  } else {
    std::cout << "belief: " << relation_text(m, *lifted.belief) << "\n";
    std::cout << "plausibility: " << relation_text(m, *lifted.plausibility) << "\n";
    std::cout << "maximal worlds: " << set_text(m, maximal_worlds(*lifted.plausibility)) << "\n";
    if (!out.empty()) std::cout << "lifted model written to " << out << "\n";
  }
  return 0;
}

int run_add_evidence(const Shared& s, const UpdateArgs& a) {
  no_dot(s, "add-evidence");
  const GeneralModel g = load(s, a.model);
  const Mode mode = mode_from_string(s.mode);
  Evaluator ev(g, mode);
  const WorldSet x = ev.truth_set(parse(a.formula));
  GeneralModel result;
  WorldSet added = x;
  if (a.closed) {
    const GeneralModel base = mode == Mode::Intended ? lift(g.base) : g;
    const UpdateRecord rec = record_add_closed(base, x);
    result = rec.after;
    added = rec.payload;
    if (mode == Mode::Intended) result = GeneralModel{result.base, std::nullopt, std::nullopt};
  } else {
    result.base = add_evidence(g.base, x);
  }
  if (!a.out.empty()) save_model(result, a.out);
  if (format_of(s) == Format::Json) {
    Json j = envelope("add-evidence");
    j["added"] = set_json(g.base, added);
    j["closed"] = a.closed;
    j["model"] = Json::parse(model_to_json(result));
    emit(j);
  } else {
    std::cout << "added " << set_text(g.base, added) << " to every E(w)\n";
    if (a.out.empty())
      std::cout << model_to_json(result);
    else
      std::cout << "model written to " << a.out << "\n";
  }
  return 0;
}

int run_harmony(const Shared& s, const UpdateArgs& a) {
  no_dot(s, "harmony");
  const GeneralModel g = load(s, a.model);
  Evaluator ev(g, mode_from_string(s.mode));
  const WorldSet x = ev.truth_set(parse(a.formula));
  const HarmonyResult h = harmony(g.base, x);
  const EvidenceModel& m = g.base;
  if (format_of(s) == Format::Json) {
    Json j = envelope("harmony");
    j["evidence"] = set_json(m, x);
    j["holds"] = h.holds;
    j["cut"] = relation_json(m, h.cut);
    j["derived"] = relation_json(m, h.derived);
    emit(j);
  } else {
    std::cout << "adding " << set_text(m, x) << ": cut order "
              << (h.holds ? "equals" : "differs from") << " the re-derived order\n";
    if (!h.holds) {
      std::cout << "  cut:     " << relation_text(m, h.cut) << "\n";
      std::cout << "  derived: " << relation_text(m, h.derived) << "\n";
    }
  }
  return h.holds ? 0 : 1;
}

int run_represent(const Shared& s, const RepresentArgs& a) {
  no_dot(s, "represent");
  const GeneralModel m = in_mode(s, load(s, a.model));
  const RepLogic logic = rep_logic_from_string(a.logic);
  auto [rep, pi] = build_representation(m, logic);
  if (!a.out.empty()) save_model(pi.source, a.out);
  const bool verify = m.size() <= a.max_worlds;
  std::optional<RepresentationReport> r;
  if (verify) r = verify_representation(m, logic, a.verify_depth, a.max_worlds);
  const bool ok = !r || r->passed;
  if (format_of(s) == Format::Json) {
    Json j = envelope("represent");
    j["logic"] = a.logic;
    j["rep_worlds"] = rep.worlds.size();
    j["verified"] = verify;
    if (r) {
      j["passed"] = r->passed;
      j["size_law"] = r->size_law;
      j["surjective"] = r->pmorphism.surjective;
      Json clauses = Json::array();
      for (const auto& c : r->pmorphism.clauses) {
        Json e;
        e["clause"] = c.clause;
        e["in_scope"] = c.in_scope;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        clauses.push_back(e);
      }
      j["clauses"] = clauses;
      j["truth_preserved"] = r->truth.holds;
      if (r->truth.formula) j["truth_failure"] = render(*r->truth.formula);
      j["plausibility_identity"] = r->plausibility_identity;
      j["scenario_structure"] = r->scenarios.holds;
      j["rep_class"] = report_json(pi.source.base, r->rep_class);
    }
    emit(j);
  } else {
    std::cout << to_string(logic) << " representation: " << rep.worlds.size() << " worlds\n";
    if (!r) {
      std::cout << "verification skipped: " << m.size() << " worlds exceeds --max-worlds " << a.max_worlds << "\n";
    } else {
      std::cout << "size law: " << yes(r->size_law) << "\n";
      std::cout << "projection surjective: " << yes(r->pmorphism.surjective) << "\n";
      for (const auto& c : r->pmorphism.clauses)
        std::cout << "  " << c.clause << ": " << (!c.in_scope ? "out of scope" : c.passed ? "pass" : "FAIL " + c.detail)
                  << "\n";
      std::cout << "truth up to depth " << a.verify_depth << ": " << (r->truth.holds ? "agrees" : "differs");
      if (r->truth.formula) std::cout << " on " << render(*r->truth.formula);
      std::cout << "\n";
      std::cout << "plausibility identity: " << yes(r->plausibility_identity) << "\n";
      std::cout << "scenario projections: " << yes(r->scenarios.holds) << " (" << r->scenarios.checked
                << " worlds checked)" << (r->scenarios.holds ? "" : " " + r->scenarios.detail) << "\n";
      std::cout << "representation valid: " << yes(r->rep_class.valid) << ", flat: " << yes(r->rep_class.flat)
                << ", uniform: " << yes(r->rep_class.uniform) << ", concise: " << yes(r->rep_class.concise) << "\n";
      std::cout << (r->passed ? "PASS" : "FAIL") << "\n";
    }
    if (!a.out.empty()) std::cout << "lifted representation written to " << a.out << "\n";
  }
  return ok ? 0 : 1;
}

int run_filter(const Shared& s, const UpdateArgs& a) {
  no_dot(s, "filter");
  const GeneralModel m = in_mode(s, load(s, a.model));
  const FiltrationQuotient q = filtrate(m, parse(a.formula));
  const FiltrationTruth t = filtration_preserves_truth(q);
  if (!a.out.empty()) save_model(q.quotient, a.out);
  const EvidenceModel& src = q.source.base;
  if (format_of(s) == Format::Json) {
    Json j = envelope("filter");
    j["pivot"] = render(q.pivot);
    Json classes = Json::array();
    for (const auto& c : q.classes) classes.push_back(set_json(src, c));
    j["classes"] = classes;
    Json map;
    for (World w = 0; w < src.size(); ++w) map[src.names[w]] = q.quotient.base.names[q.class_map[w]];
    j["class_map"] = map;
    j["truth_preserved"] = t.holds;
    if (t.formula) j["truth_failure"] = {{"formula", render(*t.formula)}, {"world", src.names[t.world]}};
    j["quotient_report"] = report_json(q.quotient.base, q.report);
    j["quotient"] = Json::parse(model_to_json(q.quotient));
    emit(j);
  } else {
    std::cout << q.classes.size() << " classes:";
    for (const auto& c : q.classes) std::cout << " " << set_text(src, c);
    std::cout << "\n";
    std::cout << "truth of subformulas preserved: " << yes(t.holds);
    if (t.formula) std::cout << " (fails for " << render(*t.formula) << " at " << src.names[t.world] << ")";
    std::cout << "\nquotient:\n";
    report_text(q.report);
    if (!a.out.empty()) std::cout << "quotient written to " << a.out << "\n";
  }
  return t.holds ? 0 : 1;
}

int run_pmorphism(const Shared& s, const PMorphismArgs& a) {
  no_dot(s, "pmorphism");
  const GeneralModel m1 = in_mode(s, load(s, a.source));
  const GeneralModel m2 = in_mode(s, load(s, a.target));
  std::optional<PMorphism> p;
  if (!a.map.empty()) {
    PMorphism q{m1, m2, std::vector<World>(m1.size(), m2.size())};
    // Commas inside parentheses belong to world ids such as (1,2,5).
    std::vector<std::string> items(1);
    int depth = 0;
    for (char c : a.map) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0)
        items.emplace_back();
      else
        items.back() += c;
    }
    for (const auto& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error("map entries look like src=tgt, got '" + item + "'");
      q.map[m1.base.index_of(item.substr(0, eq))] = m2.base.index_of(item.substr(eq + 1));
    }
    p = q;
  } else {
    p = find_surjective_pmorphism(m1, m2);
  }
  if (!p) {
    if (format_of(s) == Format::Json) {
      Json j = envelope("pmorphism");
      j["found"] = false;
      emit(j);
    } else {
      std::cout << "no surjective p-morphism\n";
    }
    return 1;
  }
  const PMorphismReport r = check_pmorphism(*p);
  std::vector<std::string> atoms;
  for (const auto& [atom, set] : m1.base.valuation) atoms.push_back(atom);
  for (const auto& [atom, set] : m2.base.valuation)
    if (!m1.base.valuation.count(atom)) atoms.push_back(atom);
  const TruthPreservation t = verify_truth_preservation_up_to(*p, atoms, a.depth);
  const bool ok = r.passed() && t.holds;
  if (format_of(s) == Format::Json) {
    Json j = envelope("pmorphism");
    j["found"] = true;
    Json map;
    for (World w = 0; w < m1.size(); ++w) map[m1.base.names[w]] = m2.base.names[p->map[w]];
    j["map"] = map;
    j["surjective"] = r.surjective;
    Json clauses = Json::array();
    for (const auto& c : r.clauses) {
      Json e;
      e["clause"] = c.clause;
      e["in_scope"] = c.in_scope;
      e["passed"] = c.passed;
      e["detail"] = c.detail;
      clauses.push_back(e);
    }
    j["clauses"] = clauses;
    j["truth_preserved"] = t.holds;
    if (t.formula) j["truth_failure"] = render(*t.formula);
    j["passed"] = ok;
    emit(j);
  } else {
    std::cout << "map:";
    for (World w = 0; w < m1.size(); ++w) std::cout << " " << m1.base.names[w] << "=" << m2.base.names[p->map[w]];
    std::cout << "\nsurjective: " << yes(r.surjective) << "\n";
    for (const auto& c : r.clauses)
      std::cout << "  " << c.clause << ": " << (!c.in_scope ? "out of scope" : c.passed ? "pass" : "FAIL " + c.detail)
                << "\n";
    std::cout << "truth up to depth " << a.depth << ": " << (t.holds ? "preserved" : "differs");
    if (t.formula) std::cout << " on " << render(*t.formula);
    std::cout << "\n" << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_validate(const Shared& s, const ValidateArgs& a) {
  no_dot(s, "validate");
  SweepOptions o;
  o.bounds.max_worlds = a.max_worlds;
  o.bounds.max_distinct_proper_sets = a.max_proper_sets;
  o.depth = a.depth;
  o.seed = s.seed;
  o.random_models = a.random;
  o.source = a.source == "general" ? FamilySource::General
             : a.source == "intended" ? FamilySource::Intended
                                      : FamilySource::Both;
  Sweeper sweeper(o);
  std::vector<SweepResult> results;
  if (a.all) {
    results = sweeper.soundness();
  } else {
    const AxiomEntry& e = find_axiom(a.axiom);
    const ModelClass cls = a.cls.empty() ? e.classes.front() : model_class_from_string(a.cls);
    results.push_back(e.rule ? sweeper.check_rule(e.name, cls) : sweeper.check_axiom(e.name, cls));
  }
  bool ok = true;
  bool written = false;
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (r.counterexample && !written && !a.out.empty()) {
      save_model(r.counterexample->model, a.out);
      written = true;
    }
  }
  if (format_of(s) == Format::Json) {
    Json j = envelope("validate");
    Json list = Json::array();
    for (const auto& r : results) list.push_back(sweep_json(r));
    j["results"] = list;
    if (written) j["counterexample_file"] = a.out;
    emit(j);
  } else {
    for (const auto& r : results) {
      std::cout << sweep_line(r) << "\n";
      if (!r.counterexample) continue;
      for (const auto& p : r.counterexample->premises) std::cout << "  premise (valid on the model): " << render(p) << "\n";
      if (written && &r == &*std::find_if(results.begin(), results.end(), [](const SweepResult& x) {
            return x.counterexample.has_value();
          })) {
        std::cout << "  model written to " << a.out << "; reproduce with: evlogic check " << a.out << " "
                  << quote(render(r.counterexample->instance)) << " --mode explicit --world "
                  << r.counterexample->model.base.names[r.counterexample->world] << "\n";
      }
    }
  }
  return ok ? 0 : 1;
}

int run_examples(const Shared& s) {
  no_dot(s, "examples");
  const auto checks = reference_examples();
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.passed;
  if (format_of(s) == Format::Json) {
    Json j = envelope("examples");
    Json list = Json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = list;
    j["passed"] = ok;
    emit(j);
  } else {
    for (const auto& c : checks)
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace evlogic::cli
