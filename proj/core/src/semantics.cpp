#include "evlogic/semantics.hpp"

#include <memory_resource>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "evlogic/dynamics.hpp"
#include "evlogic/error.hpp"
#include "evlogic/scenario.hpp"

namespace evlogic {

std::string to_string(Mode mode) { return mode == Mode::Explicit ? "explicit" : "intended"; }

Mode mode_from_string(const std::string& s) {
  if (s == "explicit") return Mode::Explicit;
  if (s == "intended") return Mode::Intended;
  throw Error("unknown mode '" + s + "'");
}

struct Evaluator::Context {
  const EvidenceModel* model = nullptr;
  std::unique_ptr<EvidenceModel> owned;
  Mode mode = Mode::Intended;
  const Relation* stored_belief = nullptr;
  const Relation* stored_plausibility = nullptr;
  std::size_t n = 0;
  WorldSet universe;

  std::optional<Relation> derived_b;
  std::optional<Relation> derived_p;
  std::vector<WorldSet> reliable_meet;
  std::vector<WorldSet> unreliable_join;
  std::pmr::monotonic_buffer_resource arena;
  std::pmr::unordered_map<Formula, WorldSet, FormulaHash> memo{&arena};
  std::unordered_map<WorldSet, std::unique_ptr<Context>, WorldSetHash> children;
  std::unordered_map<WorldSet, std::vector<std::vector<WorldSet>>, WorldSetHash> meets;

  Context(const EvidenceModel& m, Mode md) : model(&m), mode(md), n(m.size()), universe(m.universe()) {}

  const Relation& belief() {
    if (mode == Mode::Explicit) {
      if (!stored_belief) throw EvalError("explicit mode needs a belief relation");
      return *stored_belief;
    }
    if (!derived_b) derived_b = derived_belief(*model);
    return *derived_b;
  }

  const Relation& plausibility() {
    if (mode == Mode::Explicit) {
      if (!stored_plausibility) throw EvalError("explicit mode needs a plausibility relation");
      return *stored_plausibility;
    }
    if (!derived_p) derived_p = derived_plausibility(*model);
    return *derived_p;
  }

  void reliability() {
    if (!reliable_meet.empty() || n == 0) return;
    reliable_meet.assign(n, universe);
    unreliable_join.assign(n, WorldSet{});
    for (World w = 0; w < n; ++w)
      for (const auto& x : model->evidence[w]) {
        if (x.contains(w))
          reliable_meet[w] &= x;
        else
          unreliable_join[w] |= x;
      }
  }

  const std::vector<std::vector<WorldSet>>& relative_meets(const WorldSet& x) {
    auto it = meets.find(x);
    if (it != meets.end()) return it->second;
    std::vector<std::vector<WorldSet>> per_world(n);
    for (World w = 0; w < n; ++w) {
      if (w > 0 && model->evidence[w] == model->evidence[w - 1])
        per_world[w] = per_world[w - 1];
      else
        per_world[w] = maximal_fip_meets(model->evidence[w], x);
    }
    return meets.emplace(x, std::move(per_world)).first->second;
  }

  Context& added(const WorldSet& x) {
    auto it = children.find(x);
    if (it != children.end()) return *it->second;
    auto owned_model = std::make_unique<EvidenceModel>(add_evidence(*model, x));
    auto child = std::make_unique<Context>(*owned_model, Mode::Intended);
    child->owned = std::move(owned_model);
    return *children.emplace(x, std::move(child)).first->second;
  }

  WorldSet modal(Op op, const WorldSet& s) {
    WorldSet out;
    switch (op) {
      case Op::BoxA:
        return s == universe ? universe : WorldSet{};
      case Op::DiaA:
        return s.empty() ? WorldSet{} : universe;
      case Op::BoxE:
        for (World w = 0; w < n; ++w)
          for (const auto& x : model->evidence[w])
            if (x.subset_of(s)) {
              out.insert(w);
              break;
            }
        return out;
      case Op::DiaE:
        for (World w = 0; w < n; ++w) {
          bool all = true;
          for (const auto& x : model->evidence[w])
            if (!x.intersects(s)) {
              all = false;
              break;
            }
          if (all) out.insert(w);
        }
        return out;
      case Op::BoxB:
      case Op::DiaB: {
        const Relation& r = belief();
        for (World w = 0; w < n; ++w)
          if (op == Op::BoxB ? r.successors(w).subset_of(s) : r.successors(w).intersects(s)) out.insert(w);
        return out;
      }
      case Op::BoxP:
      case Op::DiaP: {
        const Relation& r = plausibility();
        for (World w = 0; w < n; ++w)
          if (op == Op::BoxP ? r.successors(w).subset_of(s) : r.successors(w).intersects(s)) out.insert(w);
        return out;
      }
      case Op::BoxC:
        reliability();
        for (World w = 0; w < n; ++w)
          if (reliable_meet[w].subset_of(s)) out.insert(w);
        return out;
      case Op::BoxU:
        reliability();
        for (World w = 0; w < n; ++w)
          if (unreliable_join[w].subset_of(s)) out.insert(w);
        return out;
      default:
        throw EvalError("not a unary modality");
    }
  }

  WorldSet conditional(const WorldSet& c, const WorldSet& body) {
    const auto& per_world = relative_meets(c);
    WorldSet out;
    for (World w = 0; w < n; ++w) {
      bool ok = true;
      for (const auto& i : per_world[w])
        if (!i.subset_of(body)) {
          ok = false;
          break;
        }
      if (ok) out.insert(w);
    }
    return out;
  }

  WorldSet conditional2(const WorldSet& c, const WorldSet& settled, const WorldSet& body) {
    const auto& per_world = relative_meets(c);
    WorldSet out;
    for (World w = 0; w < n; ++w) {
      bool ok = true;
      for (const auto& i : per_world[w])
        if (i.subset_of(settled) && !i.subset_of(body)) {
          ok = false;
          break;
        }
      if (ok) out.insert(w);
    }
    return out;
  }

  WorldSet compute(const Formula& f, const SetBinding* binding) {
    if (!binding) {
      auto it = memo.find(f);
      if (it != memo.end()) return it->second;
    }
    WorldSet out;
    switch (f.op()) {
      case Op::Atom:
        out = model->atom(f.name()) & universe;
        break;
      case Op::Meta: {
        if (!binding) throw EvalError("metavariable " + f.name() + " in a formula");
        auto it = binding->find(f.name());
        if (it == binding->end()) throw EvalError("unbound metavariable " + f.name());
        out = it->second & universe;
        break;
      }
      case Op::True:
        out = universe;
        break;
      case Op::False:
        break;
      case Op::Not:
        out = universe - compute(f.child(0), binding);
        break;
      case Op::And:
        out = compute(f.child(0), binding) & compute(f.child(1), binding);
        break;
      case Op::Or:
        out = compute(f.child(0), binding) | compute(f.child(1), binding);
        break;
      case Op::Implies:
        out = (universe - compute(f.child(0), binding)) | compute(f.child(1), binding);
        break;
      case Op::Iff: {
        const WorldSet a = compute(f.child(0), binding);
        const WorldSet b = compute(f.child(1), binding);
        out = universe - (a - b) - (b - a);
        break;
      }
      case Op::CondB:
        out = conditional(compute(f.child(0), binding), compute(f.child(1), binding));
        break;
      case Op::CondB2:
        out = conditional2(compute(f.child(0), binding), compute(f.child(1), binding),
                           compute(f.child(2), binding));
        break;
      case Op::AddEv: {
        const WorldSet x = compute(f.child(0), binding);
        out = x.empty() ? universe : added(x).compute(f.child(1), binding);
        break;
      }
      default:
        out = modal(f.op(), compute(f.child(0), binding));
        break;
    }
    if (!binding) memo.emplace(f, out);
    return out;
  }
};

Evaluator::Evaluator(const GeneralModel& model, Mode mode)
    : root_(std::make_unique<Context>(model.base, mode)) {
  if (model.belief) root_->stored_belief = &*model.belief;
  if (model.plausibility) root_->stored_plausibility = &*model.plausibility;
}

Evaluator::Evaluator(const EvidenceModel& model) : root_(std::make_unique<Context>(model, Mode::Intended)) {}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

Mode Evaluator::mode() const { return root_->mode; }
std::size_t Evaluator::size() const { return root_->n; }
WorldSet Evaluator::universe() const { return root_->universe; }

WorldSet Evaluator::truth_set(const Formula& f) { return root_->compute(f, nullptr); }

bool Evaluator::eval(World w, const Formula& f) {
  if (w >= root_->n) throw EvalError("unknown world index " + std::to_string(w));
  return truth_set(f).contains(w);
}

bool Evaluator::valid(const Formula& f) { return truth_set(f) == root_->universe; }

WorldSet Evaluator::truth_set(const Schema& s, const SetBinding& binding) { return root_->compute(s, &binding); }

WorldSet Evaluator::modal(Op op, const WorldSet& s) { return root_->modal(op, s); }

WorldSet Evaluator::conditional(const WorldSet& condition, const WorldSet& body) {
  return root_->conditional(condition, body);
}

WorldSet Evaluator::conditional2(const WorldSet& condition, const WorldSet& settled, const WorldSet& body) {
  return root_->conditional2(condition, settled, body);
}

const Relation& Evaluator::belief() { return root_->belief(); }
const Relation& Evaluator::plausibility() { return root_->plausibility(); }

void Evaluator::clear_cache() {
  root_->memo.clear();
  root_->children.clear();
  root_->meets.clear();
}

bool eval(const GeneralModel& m, Mode mode, World w, const Formula& f) { return Evaluator(m, mode).eval(w, f); }

WorldSet truth_set(const GeneralModel& m, Mode mode, const Formula& f) { return Evaluator(m, mode).truth_set(f); }

bool valid_on_model(const GeneralModel& m, Mode mode, const Formula& f) { return Evaluator(m, mode).valid(f); }

std::vector<std::pair<WorldSet, Formula>> definable_pool(Evaluator& ev, const std::vector<std::string>& atoms,
                                                         int max_depth, const OperatorSet& ops) {
  for (Op op : ops)
    if (op == Op::CondB || op == Op::CondB2 || op == Op::AddEv || op == Op::Atom || op == Op::Meta)
      throw Error("definable_pool takes static connectives and modalities only");
  std::vector<std::pair<WorldSet, Formula>> pool;
  std::unordered_set<WorldSet, WorldSetHash> seen;
  auto offer = [&](const WorldSet& s, const Formula& f) {
    if (seen.insert(s).second) pool.emplace_back(s, f);
  };
  for (const auto& a : atoms) offer(ev.truth_set(Formula::atom(a)), Formula::atom(a));
  offer(ev.universe(), Formula::top());
  offer(WorldSet{}, Formula::bottom());
  const WorldSet u = ev.universe();
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::size_t prev = pool.size();
    for (Op op : ops) {
      if (arity(op) == 1) {
        for (std::size_t i = 0; i < prev; ++i) {
          const auto [s, f] = pool[i];
          offer(op == Op::Not ? u - s : ev.modal(op, s), Formula::make(op, {f}));
        }
      } else {
        for (std::size_t i = 0; i < prev; ++i)
          for (std::size_t j = 0; j < prev; ++j) {
            const auto [a, fa] = pool[i];
            const auto [b, fb] = pool[j];
            WorldSet s;
            switch (op) {
              case Op::And: s = a & b; break;
              case Op::Or: s = a | b; break;
              case Op::Implies: s = (u - a) | b; break;
              case Op::Iff: s = u - (a - b) - (b - a); break;
              default: throw Error("unsupported operator in definable_pool");
            }
            offer(s, Formula::make(op, {fa, fb}));
          }
      }
    }
    if (pool.size() == prev) break;
  }
  return pool;
}

}  // namespace evlogic
