#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evlogic/world_set.hpp"

namespace evlogic {

/// ⟨W, E, V⟩. Worlds are the indices 0..size()-1; `names` carries the
/// user-facing ids.
struct EvidenceModel {
  std::vector<std::string> names;
  std::vector<Family> evidence;  // E(w), each kept normalized
  std::map<std::string, WorldSet> valuation;

  EvidenceModel() = default;
  /// Worlds named "1".."n", every E(w) = {W}, empty valuation.
  explicit EvidenceModel(std::size_t n);

  std::size_t size() const { return names.size(); }
  WorldSet universe() const { return WorldSet::full(size()); }
  /// Index of a world id; throws ModelError.
  World index_of(const std::string& name) const;
  /// V(atom); atoms outside the valuation are false everywhere.
  WorldSet atom(const std::string& name) const;
  /// True iff all E(w) coincide.
  bool evidence_uniform() const;
  /// Sets every E(w) to `family` (normalized).
  void set_uniform_evidence(Family family);
  /// Distinct evidence sets across all worlds, sorted.
  Family all_evidence_sets() const;

  friend bool operator==(const EvidenceModel&, const EvidenceModel&) = default;
};

/// Evidence model with optional explicit belief B and plausibility ≼.
struct GeneralModel {
  EvidenceModel base;
  std::optional<Relation> belief;
  std::optional<Relation> plausibility;

  std::size_t size() const { return base.size(); }
  WorldSet universe() const { return base.universe(); }
  bool has_relations() const { return belief.has_value() && plausibility.has_value(); }

  friend bool operator==(const GeneralModel&, const GeneralModel&) = default;
};

struct Violation {
  std::string rule;           // e.g. "constraint 3"
  std::vector<World> tuple;   // witnessing worlds
  std::string detail;         // human-readable, uses world names
};

struct ClassReport {
  bool valid = true;
  std::vector<Violation> violations;
  bool flat = false;
  bool uniform = false;
  bool concise = false;
  /// Set when the model carried no relations and the derived ones were used.
  bool relations_derived = false;
};

/// Checks constraints 1-3 and the preorder axioms, then the class predicates.
/// A model without relations is checked against its derived relations.
ClassReport validate(const GeneralModel& m);

bool is_flat(const GeneralModel& m);
bool is_uniform(const GeneralModel& m);
bool is_concise(const GeneralModel& m);

/// {v : w ≼ v}. Requires a plausibility relation.
WorldSet upset(const GeneralModel& m, World w);
WorldSet upset(const Relation& order, World w);
/// ≼-upward closure of a set.
WorldSet upward_closure(const Relation& order, const WorldSet& x);
/// Worlds w with w ≼ v ⇒ v ≼ w.
WorldSet maximal_worlds(const GeneralModel& m);
WorldSet maximal_worlds(const Relation& order);
bool is_directed(const Relation& order, const WorldSet& d);
/// Every directed subset has an upper bound; exhaustive over subsets.
bool has_boundedness(const Relation& order);

// Serialization.
struct LoadOptions {
  bool strict = false;
};
GeneralModel load_model(const std::string& path, LoadOptions options = {});
GeneralModel model_from_json(const std::string& text, LoadOptions options = {});
std::string model_to_json(const GeneralModel& m);
void save_model(const GeneralModel& m, const std::string& path);

// Enumeration.
enum class ModelClass { All, Flat, Uniform, Concise, Intended };
std::string to_string(ModelClass c);
/// Accepts all|flat|uniform|concise|intended; throws Error otherwise.
ModelClass model_class_from_string(const std::string& s);

struct ModelBounds {
  std::size_t max_worlds = 2;
  /// Per-world bound on |E(w)|, W included.
  std::size_t max_evidence_sets_per_world = 4;
  /// Bound on distinct evidence sets other than W across the model.
  std::size_t max_distinct_proper_sets = 3;
  std::vector<std::string> atoms;
  ModelClass class_filter = ModelClass::All;
  /// Smallest world count to enumerate.
  std::size_t min_worlds = 1;
};

/// Visits every model within bounds. Worlds are named "1".."n". For the
/// intended filter the visited models carry the derived relations. The
/// callback returns false to stop; the model reference is only valid
/// during the call. Returns the number of models visited.
std::uint64_t for_each_model(const ModelBounds& bounds, const std::function<bool(const GeneralModel&)>& fn);

/// Evidence frames only (no relations), same world/set bounds, every
/// valuation over `bounds.atoms`.
std::uint64_t for_each_evidence_model(const ModelBounds& bounds,
                                      const std::function<bool(const EvidenceModel&)>& fn);

/// A model of the requested class, a pure function of (seed, bounds).
GeneralModel random_model(std::uint64_t seed, const ModelBounds& bounds);

/// All preorders on n worlds, in a fixed order. n <= 5.
const std::vector<Relation>& preorders(std::size_t n);

}  // namespace evlogic
