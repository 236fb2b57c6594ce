#include "evlogic/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "evlogic/error.hpp"

namespace evlogic {

std::size_t arity(Op op) {
  switch (op) {
    case Op::Atom:
    case Op::Meta:
    case Op::True:
    case Op::False:
      return 0;
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
    case Op::CondB:
    case Op::AddEv:
      return 2;
    case Op::CondB2:
      return 3;
    default:
      return 1;
  }
}

bool is_modal_box_or_diamond(Op op) {
  switch (op) {
    case Op::BoxB:
    case Op::DiaB:
    case Op::BoxE:
    case Op::DiaE:
    case Op::BoxA:
    case Op::DiaA:
    case Op::BoxP:
    case Op::DiaP:
    case Op::BoxC:
    case Op::BoxU:
      return true;
    default:
      return false;
  }
}

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::make(Op op, std::vector<Formula> children) {
  if (children.size() != evlogic::arity(op)) throw Error("wrong number of operands for operator");
  if (op == Op::True) return top();
  if (op == Op::False) return bottom();
  if (op == Op::Atom || op == Op::Meta) throw Error("atoms and metavariables need a name");
  auto node = std::make_shared<Node>();
  node->op = op;
  node->hash = mix(0xcbf29ce484222325ULL, static_cast<std::size_t>(op));
  node->depth = 0;
  node->size = 1;
  node->has_meta = false;
  for (const auto& c : children) {
    node->hash = mix(node->hash, c.hash());
    node->depth = std::max(node->depth, c.depth() + 1);
    node->size += c.size();
    node->has_meta = node->has_meta || c.has_meta();
  }
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::Atom;
  node->hash = mix(mix(0xcbf29ce484222325ULL, static_cast<std::size_t>(Op::Atom)), std::hash<std::string>{}(name));
  node->name = std::move(name);
  node->depth = 0;
  node->size = 1;
  node->has_meta = false;
  return Formula(std::move(node));
}

Formula Formula::meta(std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::Meta;
  node->hash = mix(mix(0xcbf29ce484222325ULL, static_cast<std::size_t>(Op::Meta)), std::hash<std::string>{}(name));
  node->name = std::move(name);
  node->depth = 0;
  node->size = 1;
  node->has_meta = true;
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto node = std::make_shared<Node>();
    node->op = Op::True;
    node->hash = mix(0xcbf29ce484222325ULL, static_cast<std::size_t>(Op::True));
    node->depth = 0;
    node->size = 1;
    node->has_meta = false;
    return Formula(std::move(node));
  }();
  return t;
}

Formula Formula::bottom() {
  static const Formula f = [] {
    auto node = std::make_shared<Node>();
    node->op = Op::False;
    node->hash = mix(0xcbf29ce484222325ULL, static_cast<std::size_t>(Op::False));
    node->depth = 0;
    node->size = 1;
    node->has_meta = false;
    return Formula(std::move(node));
  }();
  return f;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size()) return false;
  if (a.name() != b.name()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.op() != b.op()) return a.op() < b.op();
  if (a.name() != b.name()) return a.name() < b.name();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.child(i) < b.child(i)) return true;
    if (b.child(i) < a.child(i)) return false;
  }
  return false;
}

Formula neg(Formula f) { return Formula::make(Op::Not, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return Formula::make(Op::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return Formula::make(Op::Or, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) { return Formula::make(Op::Implies, {std::move(a), std::move(b)}); }
Formula iff(Formula a, Formula b) { return Formula::make(Op::Iff, {std::move(a), std::move(b)}); }
Formula modal(Op op, Formula f) {
  if (!is_modal_box_or_diamond(op)) throw Error("not a modal operator");
  return Formula::make(op, {std::move(f)});
}
Formula cond_belief(Formula condition, Formula body) {
  return Formula::make(Op::CondB, {std::move(condition), std::move(body)});
}
Formula cond_belief2(Formula condition, Formula settled, Formula body) {
  return Formula::make(Op::CondB2, {std::move(condition), std::move(settled), std::move(body)});
}
Formula add_evidence(Formula evidence, Formula body) {
  return Formula::make(Op::AddEv, {std::move(evidence), std::move(body)});
}

std::string Signature::str() const {
  std::string s;
  if (a) s += 'A';
  if (b) s += 'B';
  if (e) s += 'E';
  if (p) s += 'P';
  return s;
}

Signature signature_of(const Formula& f) {
  Signature sig;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.op()) {
      case Op::BoxA:
      case Op::DiaA:
        sig.a = true;
        break;
      case Op::BoxB:
      case Op::DiaB:
        sig.b = true;
        break;
      case Op::BoxP:
      case Op::DiaP:
        sig.p = true;
        break;
      case Op::BoxE:
      case Op::DiaE:
      case Op::BoxC:
      case Op::BoxU:
      case Op::CondB:
      case Op::CondB2:
      case Op::AddEv:
        sig.e = true;
        break;
      default:
        break;
    }
    for (const auto& c : g.children()) walk(c);
  };
  walk(f);
  return sig;
}

bool is_basic(const Formula& f) {
  switch (f.op()) {
    case Op::BoxC:
    case Op::BoxU:
    case Op::CondB:
    case Op::CondB2:
    case Op::AddEv:
      return false;
    default:
      break;
  }
  for (const auto& c : f.children())
    if (!is_basic(c)) return false;
  return true;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    for (const auto& c : g.children()) walk(c);
    if (seen.insert(g).second) out.push_back(g);
  };
  walk(f);
  return out;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  for (const auto& g : subformulas(f))
    if (g.op() == Op::Atom) out.insert(g.name());
  return out;
}

std::set<std::string> metavariables_of(const Formula& f) {
  std::set<std::string> out;
  for (const auto& g : subformulas(f))
    if (g.op() == Op::Meta) out.insert(g.name());
  return out;
}

Formula instantiate(const Schema& schema, const Binding& binding) {
  if (!schema.has_meta()) return schema;
  if (schema.op() == Op::Meta) {
    auto it = binding.find(schema.name());
    if (it == binding.end()) throw Error("unbound metavariable " + schema.name());
    return it->second;
  }
  std::vector<Formula> kids;
  kids.reserve(schema.arity());
  for (const auto& c : schema.children()) kids.push_back(instantiate(c, binding));
  return Formula::make(schema.op(), std::move(kids));
}

OperatorSet boolean_operators() { return {Op::Not, Op::And, Op::Or, Op::Implies, Op::Iff}; }

OperatorSet basic_operators() {
  return {Op::Not,  Op::And,  Op::Or,   Op::Implies, Op::Iff,  Op::BoxB, Op::DiaB,
          Op::BoxE, Op::DiaE, Op::BoxA, Op::DiaA,    Op::BoxP, Op::DiaP};
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms, int max_depth,
                                        const OperatorSet& ops) {
  std::vector<Formula> all;
  for (const auto& a : atoms) all.push_back(Formula::atom(a));
  all.push_back(Formula::top());
  all.push_back(Formula::bottom());
  {
    // Atoms may repeat in the input list.
    std::vector<Formula> dedup;
    std::unordered_set<Formula, FormulaHash> seen;
    for (auto& f : all)
      if (seen.insert(f).second) dedup.push_back(f);
    all = std::move(dedup);
  }
  std::size_t old_end = 0;  // [old_end, all.size()) holds last level's new formulas
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::size_t prev_end = all.size();
    std::vector<Formula> fresh;
    auto is_new = [&](std::size_t i) { return i >= old_end; };
    for (Op op : ops) {
      switch (arity(op)) {
        case 1:
          for (std::size_t i = old_end; i < prev_end; ++i) fresh.push_back(Formula::make(op, {all[i]}));
          break;
        case 2:
          for (std::size_t i = 0; i < prev_end; ++i)
            for (std::size_t j = 0; j < prev_end; ++j)
              if (is_new(i) || is_new(j)) fresh.push_back(Formula::make(op, {all[i], all[j]}));
          break;
        case 3:
          for (std::size_t i = 0; i < prev_end; ++i)
            for (std::size_t j = 0; j < prev_end; ++j)
              for (std::size_t k = 0; k < prev_end; ++k)
                if (is_new(i) || is_new(j) || is_new(k))
                  fresh.push_back(Formula::make(op, {all[i], all[j], all[k]}));
          break;
        default:
          break;
      }
    }
    old_end = prev_end;
    for (auto& f : fresh) all.push_back(std::move(f));
    if (all.size() == prev_end) break;
  }
  return all;
}

}  // namespace evlogic
