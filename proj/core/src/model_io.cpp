#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "evlogic/error.hpp"
#include "evlogic/model.hpp"

namespace evlogic {

namespace {

using nlohmann::json;

std::string id_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  throw ModelError("world ids must be strings or integers, got " + j.dump());
}

bool looks_numeric(const std::string& s) {
  if (s.empty() || s.size() > 15) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

json id_json(const std::string& name) {
  if (looks_numeric(name)) return std::stoll(name);
  return name;
}

WorldSet read_set(const EvidenceModel& m, const json& j, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + " must be an array of world ids");
  WorldSet s;
  for (const auto& id : j) s.insert(m.index_of(id_of(id)));
  return s;
}

Relation read_relation(const EvidenceModel& m, const json& j, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + " must be an array of pairs");
  Relation r(m.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ModelError(what + " entries must be [id, id] pairs");
    r.add(m.index_of(id_of(pair[0])), m.index_of(id_of(pair[1])));
  }
  return r;
}

Family read_family(const EvidenceModel& m, const json& j, const std::string& owner, bool strict) {
  if (!j.is_array()) throw ModelError("evidence of " + owner + " must be an array of sets");
  Family fam;
  for (const auto& x : j) {
    WorldSet s = read_set(m, x, "evidence set");
    if (s.empty()) throw ModelError("empty evidence set in E(" + owner + ")");
    fam.push_back(s);
  }
  const WorldSet u = m.universe();
  if (std::find(fam.begin(), fam.end(), u) == fam.end()) {
    if (strict) throw ModelError("W missing from E(" + owner + ") in strict mode");
    fam.push_back(u);
  }
  normalize(fam);
  return fam;
}

json set_json(const EvidenceModel& m, const WorldSet& s) {
  json arr = json::array();
  s.for_each([&](World w) { arr.push_back(id_json(m.names[w])); });
  return arr;
}

json relation_json(const EvidenceModel& m, const Relation& r) {
  json arr = json::array();
  for (auto [a, b] : r.pairs()) arr.push_back(json::array({id_json(m.names[a]), id_json(m.names[b])}));
  return arr;
}

}  // namespace

GeneralModel model_from_json(const std::string& text, LoadOptions options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed model file: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("malformed model file: top level must be an object");
  if (!doc.contains("worlds") || !doc["worlds"].is_array() || doc["worlds"].empty())
    throw ModelError("malformed model file: \"worlds\" must be a nonempty array");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const char* known[] = {"worlds", "valuation", "evidence", "uniform_evidence", "belief", "plausibility",
                                  "schema_version"};
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
      throw ModelError("malformed model file: unknown key \"" + it.key() + "\"");
  }
  GeneralModel g;
  EvidenceModel& m = g.base;
  for (const auto& id : doc["worlds"]) {
    std::string name = id_of(id);
    if (std::find(m.names.begin(), m.names.end(), name) != m.names.end())
      throw ModelError("duplicate world id '" + name + "'");
    m.names.push_back(std::move(name));
  }
  if (m.size() > kMaxWorlds) throw ModelError("too many worlds");
  if (doc.contains("evidence") && doc.contains("uniform_evidence"))
    throw ModelError("malformed model file: give either \"evidence\" or \"uniform_evidence\"");
  m.evidence.assign(m.size(), Family{});
  if (doc.contains("uniform_evidence")) {
    m.set_uniform_evidence(read_family(m, doc["uniform_evidence"], "every world", options.strict));
  } else {
    std::vector<bool> seen(m.size(), false);
    if (doc.contains("evidence")) {
      const json& ev = doc["evidence"];
      if (!ev.is_object()) throw ModelError("malformed model file: \"evidence\" must map world ids to families");
      for (auto it = ev.begin(); it != ev.end(); ++it) {
        const World w = m.index_of(it.key());
        m.evidence[w] = read_family(m, it.value(), it.key(), options.strict);
        seen[w] = true;
      }
    }
    for (World w = 0; w < m.size(); ++w)
      if (!seen[w]) m.evidence[w] = read_family(m, json::array(), m.names[w], options.strict);
  }
  if (doc.contains("valuation")) {
    const json& val = doc["valuation"];
    if (!val.is_object()) throw ModelError("malformed model file: \"valuation\" must map atoms to world lists");
    for (auto it = val.begin(); it != val.end(); ++it) m.valuation[it.key()] = read_set(m, it.value(), "valuation");
  }
  if (doc.contains("belief")) g.belief = read_relation(m, doc["belief"], "belief");
  if (doc.contains("plausibility")) g.plausibility = read_relation(m, doc["plausibility"], "plausibility");
  if (options.strict) {
    const ClassReport rep = validate(g);
    if (!rep.valid) throw ModelError("strict mode: " + rep.violations.front().rule + ": " + rep.violations.front().detail);
  }
  return g;
}

GeneralModel load_model(const std::string& path, LoadOptions options) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str(), options);
}

std::string model_to_json(const GeneralModel& g) {
  const EvidenceModel& m = g.base;
  nlohmann::ordered_json doc;
  json worlds = json::array();
  for (const auto& n : m.names) worlds.push_back(id_json(n));
  doc["worlds"] = worlds;
  json val = json::object();
  for (const auto& [atom, s] : m.valuation) val[atom] = set_json(m, s);
  doc["valuation"] = val;
  if (m.size() > 1 && m.evidence_uniform()) {
    json fam = json::array();
    for (const auto& x : m.evidence[0]) fam.push_back(set_json(m, x));
    doc["uniform_evidence"] = fam;
  } else {
    nlohmann::ordered_json ev;
    for (World w = 0; w < m.size(); ++w) {
      json fam = json::array();
      for (const auto& x : m.evidence[w]) fam.push_back(set_json(m, x));
      ev[m.names[w]] = fam;
    }
    doc["evidence"] = ev;
  }
  if (g.belief) doc["belief"] = relation_json(m, *g.belief);
  if (g.plausibility) doc["plausibility"] = relation_json(m, *g.plausibility);
  return doc.dump(2) + "\n";
}

void save_model(const GeneralModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write model file '" + path + "'");
  out << model_to_json(m);
}

}  // namespace evlogic
