#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "evlogic/formula.hpp"
#include "evlogic/model.hpp"

namespace evlogic {

/// explicit: [B] and [P] use the stored relations.
/// intended: they use B_E and ≼_E derived from the evidence.
enum class Mode { Explicit, Intended };

std::string to_string(Mode mode);
/// Accepts explicit|intended; throws Error otherwise.
Mode mode_from_string(const std::string& s);

/// Metavariables evaluated as fixed sets of worlds.
using SetBinding = std::map<std::string, WorldSet>;

/// Model checker bound to one model. Truth sets are memoized per formula
/// for the evaluator's lifetime. Evidence addition [+φ] evaluates its body
/// in the model with [[φ]] added to every E(w), in intended mode. The model
/// must outlive the evaluator.
class Evaluator {
 public:
  Evaluator(const GeneralModel& model, Mode mode);
  /// Intended mode over an evidence model.
  explicit Evaluator(const EvidenceModel& model);
  Evaluator(GeneralModel&&, Mode) = delete;
  explicit Evaluator(EvidenceModel&&) = delete;
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  Mode mode() const;
  std::size_t size() const;
  WorldSet universe() const;

  WorldSet truth_set(const Formula& f);
  bool eval(World w, const Formula& f);
  bool valid(const Formula& f);

  /// Truth set of a schema whose metavariables denote the given sets.
  /// Not memoized.
  WorldSet truth_set(const Schema& s, const SetBinding& binding);

  /// {w : w ⊨ op S} for a unary modal operator and a truth set S.
  WorldSet modal(Op op, const WorldSet& s);
  /// Truth set of B{φ}ψ given [[φ]] and [[ψ]].
  WorldSet conditional(const WorldSet& condition, const WorldSet& body);
  /// Truth set of B{φ;α}χ given [[φ]], [[α]] and [[χ]].
  WorldSet conditional2(const WorldSet& condition, const WorldSet& settled, const WorldSet& body);

  /// Relations used by [B] and [P] in the current mode.
  const Relation& belief();
  const Relation& plausibility();

  /// Drops memoized truth sets and cached updated models.
  void clear_cache();

 private:
  struct Context;
  std::unique_ptr<Context> root_;
};

/// One-shot helpers; each builds a fresh evaluator.
bool eval(const GeneralModel& m, Mode mode, World w, const Formula& f);
WorldSet truth_set(const GeneralModel& m, Mode mode, const Formula& f);
bool valid_on_model(const GeneralModel& m, Mode mode, const Formula& f);

/// One representative formula per truth set reachable with formulas of
/// depth <= max_depth over atoms (plus true/false) and static operators
/// `ops`. Earlier (shallower) representatives win. Exact for static
/// operators, whose value depends only on the truth sets of their operands.
std::vector<std::pair<WorldSet, Formula>> definable_pool(Evaluator& ev, const std::vector<std::string>& atoms,
                                                         int max_depth, const OperatorSet& ops);

}  // namespace evlogic
