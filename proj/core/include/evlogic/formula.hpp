#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace evlogic {

/// Node kinds of the evidence language and its extensions.
/// `Meta` nodes only occur in schemas.
enum class Op : std::uint8_t {
  Atom,
  Meta,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  BoxB,
  DiaB,
  BoxE,
  DiaE,
  BoxA,
  DiaA,
  BoxP,  // [P], safe belief over the plausibility order
  DiaP,
  BoxC,  // reliable belief
  BoxU,  // unreliable belief
  CondB,   // B{condition} body
  CondB2,  // B{condition; settled} body
  AddEv,   // [+evidence] body
};

std::size_t arity(Op op);
bool is_modal_box_or_diamond(Op op);

/// Immutable formula tree with structural equality. Copies share nodes.
class Formula {
 public:
  /// Default-constructs `true`.
  Formula();

  static Formula atom(std::string name);
  static Formula meta(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula make(Op op, std::vector<Formula> children);

  Op op() const { return node_->op; }
  /// Atom or metavariable name; empty otherwise.
  const std::string& name() const { return node_->name; }
  std::size_t arity() const { return node_->children.size(); }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  const std::vector<Formula>& children() const { return node_->children; }

  std::size_t hash() const { return node_->hash; }
  int depth() const { return node_->depth; }
  std::size_t size() const { return node_->size; }
  bool has_meta() const { return node_->has_meta; }
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> children;
    std::size_t hash;
    int depth;
    std::size_t size;
    bool has_meta;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Builders.
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula modal(Op op, Formula f);
Formula cond_belief(Formula condition, Formula body);
Formula cond_belief2(Formula condition, Formula settled, Formula body);
Formula add_evidence(Formula evidence, Formula body);

/// Modal vocabulary used by a formula. P stands for the plausibility order.
struct Signature {
  bool a = false;
  bool b = false;
  bool e = false;
  bool p = false;

  bool subset_of(const Signature& o) const {
    return (!a || o.a) && (!b || o.b) && (!e || o.e) && (!p || o.p);
  }
  std::string str() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Conditional, dynamic and reliable/unreliable operators count as E.
Signature signature_of(const Formula& f);

/// True iff the formula lies in the basic language over A, B, E, P and the
/// Boolean connectives (no [C], [U], conditional or dynamic operators).
bool is_basic(const Formula& f);

/// Post-order, duplicate-free list of subformulas, ending with `f`.
std::vector<Formula> subformulas(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> metavariables_of(const Formula& f);

/// A schema is a formula whose leaves may be metavariables.
using Schema = Formula;
using Binding = std::map<std::string, Formula>;

/// Simultaneous substitution; throws Error on an unbound metavariable.
Formula instantiate(const Schema& schema, const Binding& binding);

/// Operators that `enumerate_formulas` may apply.
using OperatorSet = std::vector<Op>;

OperatorSet boolean_operators();
/// Booleans plus the eight box/diamond modalities over A, B, E, P.
OperatorSet basic_operators();

/// Every formula of depth <= max_depth over `atoms` (plus true/false) built
/// with `ops`, without duplicates, in a fixed order: by depth, then by
/// operator order, then by child order.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms, int max_depth,
                                        const OperatorSet& ops);

// Concrete syntax.
struct ParseOptions {
  bool allow_metavariables = false;
};

Formula parse(std::string_view text, ParseOptions options = {});
Schema parse_schema(std::string_view text);
std::string render(const Formula& f);

}  // namespace evlogic
