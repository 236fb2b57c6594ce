#include "evlogic/validity.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <unordered_map>

#include "evlogic/dynamics.hpp"
#include "evlogic/error.hpp"
#include "evlogic/scenario.hpp"

namespace evlogic {

namespace {

AxiomEntry axiom(std::string name, std::vector<const char*> schemas, std::vector<ModelClass> classes) {
  AxiomEntry e;
  e.name = std::move(name);
  for (const char* s : schemas) e.schemas.push_back(parse_schema(s));
  e.classes = std::move(classes);
  return e;
}

AxiomEntry rule(std::string name, std::vector<const char*> premises, const char* conclusion) {
  AxiomEntry e;
  e.name = std::move(name);
  e.rule = true;
  for (const char* s : premises) e.premises.push_back(parse_schema(s));
  e.schemas.push_back(parse_schema(conclusion));
  e.classes = {ModelClass::All};
  return e;
}

std::vector<AxiomEntry> build_registry() {
  const std::vector<ModelClass> all{ModelClass::All};
  const std::vector<ModelClass> flat{ModelClass::Flat, ModelClass::Concise};
  const std::vector<ModelClass> uniform{ModelClass::Uniform, ModelClass::Concise};
  return {
      axiom("tautology",
            {"F -> F", "F | ~F", "~~F <-> F", "F & G -> F", "F -> F | G", "(F -> G) -> (~G -> ~F)",
             "(F -> (G -> H)) -> ((F -> G) -> (F -> H))", "~(F & G) <-> ~F | ~G", "(F -> G) & (G -> H) -> (F -> H)"},
            all),
      axiom("s5-a",
            {"[A](F -> G) -> ([A]F -> [A]G)", "[A]F -> F", "[A]F -> [A][A]F", "<A>F -> [A]<A>F", "<A>F <-> ~[A]~F"},
            all),
      axiom("k-b", {"[B](F -> G) -> ([B]F -> [B]G)", "<B>F <-> ~[B]~F"}, all),
      axiom("s4-p", {"[P](F -> G) -> ([P]F -> [P]G)", "[P]F -> F", "[P]F -> [P][P]F", "<P>F <-> ~[P]~F"}, all),
      axiom("no-empty-evidence", {"<E>true"}, all),
      axiom("pullout", {"[E]F & [A]G <-> [E](F & [A]G)"}, all),
      axiom("universality", {"[A]F -> [E]F", "[A]F -> [B]F", "[A]F -> [P]F"}, all),
      axiom("plausible-evidence", {"[E]F -> [E](F & [P]F)"}, all),
      axiom("b-monotonicity", {"[B]F -> [B][P]F"}, all),
      axiom("flatness", {"[E]F -> <B>F"}, flat),
      axiom("uniformity", {"[B]F -> [A][B]F", "<B>F -> [A]<B>F", "[E]F -> [A][E]F", "<E>F -> [A]<E>F"}, uniform),
      axiom("maximality", {"<B>(<P>F & G) -> <B>(F & <P>G)"}, uniform),
      axiom("conciseness", {"[B]F -> <P>[P]F"}, {ModelClass::Concise}),
      rule("e-monotonicity", {"F -> G"}, "[E]F -> [E]G"),
      rule("mp", {"F", "F -> G"}, "G"),
      rule("n-a", {"F"}, "[A]F"),
  };
}

bool class_within(ModelClass cls, ModelClass declared) {
  if (declared == ModelClass::All || cls == declared) return true;
  if (cls == ModelClass::Concise) return declared == ModelClass::Flat || declared == ModelClass::Uniform;
  if (cls == ModelClass::Intended) return declared == ModelClass::Flat;
  return false;
}

// ---------------------------------------------------------------------------
// Schemas compiled to a post-order program over world masks.

enum Kind { kA = 0, kE = 1, kB = 2, kP = 3 };
constexpr unsigned kUsesE = 1, kUsesB = 2, kUsesP = 4;

struct Program {
  struct Node {
    Op op = Op::True;
    int a = -1;
    int b = -1;
    int meta = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> roots;  // premises first, conclusion (or axiom schemas) after
  std::size_t premises = 0;
  std::vector<std::string> metas;
  unsigned uses = 0;
};

int kind_of(Op op) {
  switch (op) {
    case Op::BoxA: case Op::DiaA: return kA;
    case Op::BoxE: case Op::DiaE: return kE;
    case Op::BoxB: case Op::DiaB: return kB;
    case Op::BoxP: case Op::DiaP: return kP;
    default: return -1;
  }
}

bool is_box(Op op) { return op == Op::BoxA || op == Op::BoxE || op == Op::BoxB || op == Op::BoxP; }

int emit(Program& p, const Formula& f, std::map<Formula, int>& done) {
  if (auto it = done.find(f); it != done.end()) return it->second;
  Program::Node node;
  node.op = f.op();
  switch (f.op()) {
    case Op::Meta: {
      auto it = std::find(p.metas.begin(), p.metas.end(), f.name());
      node.meta = static_cast<int>(it - p.metas.begin());
      if (it == p.metas.end()) p.metas.push_back(f.name());
      break;
    }
    case Op::True: case Op::False: break;
    case Op::Atom: throw Error("frame sweeps take schemas without atoms: " + f.name());
    case Op::BoxC: case Op::BoxU: case Op::CondB: case Op::CondB2: case Op::AddEv:
      throw Error("frame sweeps take the A, B, E and P modalities only: " + render(f));
    default: {
      node.a = emit(p, f.child(0), done);
      if (f.arity() == 2) node.b = emit(p, f.child(1), done);
      const int k = kind_of(f.op());
      if (k == kE) p.uses |= kUsesE;
      if (k == kB) p.uses |= kUsesB;
      if (k == kP) p.uses |= kUsesP;
    }
  }
  p.nodes.push_back(node);
  return done[f] = static_cast<int>(p.nodes.size()) - 1;
}

Program compile(const std::vector<Schema>& premises, const std::vector<Schema>& schemas) {
  Program p;
  std::map<Formula, int> done;
  for (const auto& s : premises) p.roots.push_back(emit(p, s, done));
  for (const auto& s : schemas) p.roots.push_back(emit(p, s, done));
  p.premises = premises.size();
  return p;
}

// Box and diamond tables for one modality, indexed by the operand mask:
// entries [0, 2^n) for the box, [2^n, 2^(n+1)) for the diamond.
using Table = std::vector<std::uint64_t>;

struct Tables {
  std::size_t n = 0;
  std::array<const Table*, 4> t{};
};

Table modal_table(Evaluator& ev, Op box, Op dia) {
  const std::size_t size = std::size_t{1} << ev.size();
  Table t(2 * size);
  for (std::uint64_t s = 0; s < size; ++s) {
    t[s] = ev.modal(box, WorldSet::from_mask(s)).mask();
    t[size + s] = ev.modal(dia, WorldSet::from_mask(s)).mask();
  }
  return t;
}

// Evaluates every node under one assignment into `out`.
void run(const Program& p, const Tables& tb, const std::uint64_t* binding, std::vector<std::uint64_t>& out) {
  const std::uint64_t u = (std::uint64_t{1} << tb.n) - 1;
  const std::size_t size = std::size_t{1} << tb.n;
  out.resize(p.nodes.size());
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& nd = p.nodes[i];
    std::uint64_t v = 0;
    switch (nd.op) {
      case Op::Meta: v = binding[nd.meta]; break;
      case Op::True: v = u; break;
      case Op::False: v = 0; break;
      case Op::Not: v = u & ~out[nd.a]; break;
      case Op::And: v = out[nd.a] & out[nd.b]; break;
      case Op::Or: v = out[nd.a] | out[nd.b]; break;
      case Op::Implies: v = (u & ~out[nd.a]) | out[nd.b]; break;
      case Op::Iff: v = u & ~(out[nd.a] ^ out[nd.b]); break;
      default: {
        const Table& t = *tb.t[kind_of(nd.op)];
        v = t[(is_box(nd.op) ? 0 : size) + out[nd.a]];
      }
    }
    out[i] = v;
  }
}

struct Failure {
  std::vector<std::uint64_t> binding;
  World world = 0;
};

// Checks one structure over a list of candidate masks per metavariable.
// Returns the first failing assignment in odometer order.
std::optional<Failure> check_structure(const Program& p, const Tables& tb, const std::vector<std::uint64_t>& domain,
                                       std::uint64_t& instances) {
  const std::uint64_t u = (std::uint64_t{1} << tb.n) - 1;
  const std::size_t k = p.metas.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<std::uint64_t> binding(k, domain.empty() ? 0 : domain[0]);
  std::vector<std::uint64_t> out;
  if (k > 0 && domain.empty()) return std::nullopt;
  while (true) {
    ++instances;
    run(p, tb, binding.data(), out);
    bool premises = true;
    for (std::size_t r = 0; r < p.premises; ++r)
      if (out[p.roots[r]] != u) premises = false;
    if (premises)
      for (std::size_t r = p.premises; r < p.roots.size(); ++r) {
        const std::uint64_t v = out[p.roots[r]];
        if (v != u) {
          const std::uint64_t bad = u & ~v;
          World w = 0;
          while (!((bad >> w) & 1U)) ++w;
          return Failure{binding, w};
        }
      }
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (++idx[j] < domain.size()) {
        binding[j] = domain[idx[j]];
        break;
      }
      idx[j] = 0;
      binding[j] = domain[0];
      if (j == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

// Every valuation of `atoms` over an n-world frame.
void for_each_valuation(std::size_t n, const std::vector<std::string>& atoms,
                        const std::function<bool(const std::map<std::string, WorldSet>&)>& fn) {
  const std::uint64_t per = std::uint64_t{1} << n;
  std::vector<std::uint64_t> v(atoms.size(), 0);
  while (true) {
    std::map<std::string, WorldSet> val;
    for (std::size_t i = 0; i < atoms.size(); ++i) val[atoms[i]] = WorldSet::from_mask(v[i]);
    if (!fn(val)) return;
    std::size_t j = atoms.size();
    while (j > 0) {
      --j;
      if (++v[j] < per) break;
      v[j] = 0;
      if (j == 0) return;
    }
    if (atoms.empty()) return;
  }
}

// Tries to realize a failing assignment with formulas: the pool of the
// model supplies one formula per definable truth set.
std::optional<Counterexample> realize(const GeneralModel& m, const Program& p, const std::vector<Schema>& premises,
                                      const std::vector<Schema>& schemas, const Failure& f,
                                      std::vector<std::pair<WorldSet, Formula>>& pool, Evaluator& ev) {
  std::map<std::uint64_t, Formula> by_mask;
  for (const auto& [s, formula] : pool) by_mask.emplace(s.mask(), formula);
  Binding b;
  for (std::size_t i = 0; i < p.metas.size(); ++i) {
    auto it = by_mask.find(f.binding[i]);
    if (it == by_mask.end()) return std::nullopt;
    b[p.metas[i]] = it->second;
  }
  Counterexample cx;
  cx.model = m;
  cx.world = f.world;
  for (const auto& s : premises) {
    const Formula inst = instantiate(s, b);
    if (!ev.valid(inst)) throw Error("table evaluation disagrees with the evaluator on " + render(inst));
    cx.premises.push_back(inst);
  }
  for (const auto& s : schemas) {
    const Formula inst = instantiate(s, b);
    if (!ev.eval(f.world, inst)) {
      cx.instance = inst;
      return cx;
    }
  }
  throw Error("table evaluation disagrees with the evaluator at world " + m.base.names[f.world]);
}

std::optional<Counterexample> realize_on_frame(const GeneralModel& frame, const Program& p,
                                               const std::vector<Schema>& premises,
                                               const std::vector<Schema>& schemas, const Failure& f,
                                               const SweepOptions& opt) {
  std::optional<Counterexample> found;
  for_each_valuation(frame.size(), opt.bounds.atoms, [&](const std::map<std::string, WorldSet>& val) {
    GeneralModel m = frame;
    m.base.valuation = val;
    Evaluator ev(m, Mode::Explicit);
    auto pool = definable_pool(ev, opt.bounds.atoms, opt.depth, basic_operators());
    found = realize(m, p, premises, schemas, f, pool, ev);
    return !found;
  });
  return found;
}

std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::size_t class_index(ModelClass c) {
  switch (c) {
    case ModelClass::Flat: return 1;
    case ModelClass::Uniform: return 2;
    case ModelClass::Concise: return 3;
    default: return 0;
  }
}

bool in_class(const GeneralModel& g, ModelClass c) {
  switch (c) {
    case ModelClass::Flat: return is_flat(g);
    case ModelClass::Uniform: return is_uniform(g);
    case ModelClass::Concise: return is_concise(g);
    default: return true;
  }
}

}  // namespace

const std::vector<AxiomEntry>& axiom_registry() {
  static const std::vector<AxiomEntry> registry = build_registry();
  return registry;
}

const AxiomEntry& find_axiom(const std::string& name) {
  for (const auto& e : axiom_registry())
    if (e.name == name) return e;
  throw Error("unknown axiom or rule '" + name + "'");
}

bool declared_for(const AxiomEntry& entry, ModelClass cls) {
  return std::any_of(entry.classes.begin(), entry.classes.end(),
                     [&](ModelClass d) { return class_within(cls, d); });
}

// ---------------------------------------------------------------------------

struct Sweeper::Impl {
  SweepOptions opt;

  // Interned tables per modality kind.
  struct Store {
    std::map<Table, std::uint32_t> ids;
    std::vector<Table> tables;
    std::uint32_t intern(Table t) {
      auto [it, fresh] = ids.emplace(std::move(t), static_cast<std::uint32_t>(tables.size()));
      if (fresh) tables.push_back(it->first);
      return it->second;
    }
  };
  std::array<Store, 4> stores;
  std::map<std::size_t, std::uint32_t> a_ids;  // n -> id in stores[kA]

  struct KeySet {
    std::unordered_map<std::uint64_t, std::uint64_t> first;  // key -> frame ordinal
    std::vector<std::uint64_t> order;
  };
  // [source][class][pattern]
  std::array<std::array<std::array<KeySet, 8>, 4>, 2> keys;
  std::array<unsigned, 2> built{};  // patterns collected per source (bit per pattern)
  std::array<bool, 2> counted{};
  std::array<std::array<std::map<std::size_t, std::uint64_t>, 4>, 2> frames;  // [source][class][n]

  explicit Impl(SweepOptions o) : opt(std::move(o)) {
    if (opt.bounds.max_worlds > 6) throw Error("exhaustive sweeps are limited to 6 worlds");
  }

  ModelBounds frame_bounds() const {
    ModelBounds b = opt.bounds;
    b.atoms.clear();
    b.class_filter = ModelClass::All;
    return b;
  }

  void enumerate(int source, const std::function<bool(const GeneralModel&, std::uint64_t)>& fn) const {
    std::uint64_t ordinal = 0;
    if (source == 0) {
      for_each_model(frame_bounds(), [&](const GeneralModel& g) { return fn(g, ordinal++); });
    } else {
      for_each_evidence_model(frame_bounds(), [&](const EvidenceModel& e) {
        const GeneralModel g = lift(e);
        return fn(g, ordinal++);
      });
    }
  }

  static std::uint64_t pack(std::size_t n, unsigned pattern, std::uint32_t e, std::uint32_t b, std::uint32_t p) {
    std::uint64_t key = n;
    if (pattern & kUsesE) key |= std::uint64_t{e} << 3;
    if (pattern & kUsesB) key |= std::uint64_t{b} << 27;
    if (pattern & kUsesP) key |= std::uint64_t{p} << 45;
    return key;
  }

  Tables unpack(std::uint64_t key) const {
    Tables t;
    t.n = key & 7U;
    t.t[kA] = &stores[kA].tables[a_ids.at(t.n)];
    const auto e = static_cast<std::uint32_t>((key >> 3) & ((1U << 24) - 1));
    const auto b = static_cast<std::uint32_t>((key >> 27) & ((1U << 18) - 1));
    const auto p = static_cast<std::uint32_t>(key >> 45);
    t.t[kE] = e < stores[kE].tables.size() ? &stores[kE].tables[e] : nullptr;
    t.t[kB] = b < stores[kB].tables.size() ? &stores[kB].tables[b] : nullptr;
    t.t[kP] = p < stores[kP].tables.size() ? &stores[kP].tables[p] : nullptr;
    return t;
  }

  void build(int source, unsigned patterns) {
    const unsigned missing = patterns & ~built[source];
    if (missing == 0 && counted[source]) return;
    std::vector<Family> last_evidence;
    std::uint32_t eid = 0;
    std::map<std::vector<std::uint64_t>, std::uint32_t> b_cache, p_cache;
    auto rows = [](const Relation& r) {
      std::vector<std::uint64_t> out;
      for (World w = 0; w < r.size(); ++w) out.push_back(r.successors(w).mask());
      return out;
    };
    enumerate(source, [&](const GeneralModel& g, std::uint64_t ordinal) {
      const std::size_t n = g.size();
      std::optional<Evaluator> ev;
      auto evaluator = [&]() -> Evaluator& {
        if (!ev) ev.emplace(g, Mode::Explicit);
        return *ev;
      };
      if (!a_ids.count(n)) a_ids[n] = stores[kA].intern(modal_table(evaluator(), Op::BoxA, Op::DiaA));
      if (last_evidence.empty() || last_evidence != g.base.evidence) {
        last_evidence = g.base.evidence;
        eid = stores[kE].intern(modal_table(evaluator(), Op::BoxE, Op::DiaE));
      }
      auto relation_id = [&](std::map<std::vector<std::uint64_t>, std::uint32_t>& cache, const Relation& r, int kind,
                             Op box, Op dia) {
        auto key = rows(r);
        key.push_back(n);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const std::uint32_t id = stores[kind].intern(modal_table(evaluator(), box, dia));
        cache.emplace(std::move(key), id);
        return id;
      };
      const std::uint32_t bid = relation_id(b_cache, *g.belief, kB, Op::BoxB, Op::DiaB);
      const std::uint32_t pid = relation_id(p_cache, *g.plausibility, kP, Op::BoxP, Op::DiaP);
      if (eid >= (1U << 24) || bid >= (1U << 18) || pid >= (1U << 18)) throw Error("sweep table index overflow");
      std::array<bool, 4> member{true, is_flat(g), is_uniform(g), is_concise(g)};
      for (std::size_t c = 0; c < 4; ++c) {
        if (!member[c]) continue;
        if (!counted[source]) ++frames[source][c][n];
        for (unsigned pat = 0; pat < 8; ++pat) {
          if (!((missing >> pat) & 1U)) continue;
          KeySet& ks = keys[source][c][pat];
          const std::uint64_t key = pack(n, pat, eid, bid, pid);
          if (ks.first.emplace(key, ordinal).second) ks.order.push_back(key);
        }
      }
      return true;
    });
    built[source] |= missing;
    counted[source] = true;
  }

  GeneralModel frame_at(int source, std::uint64_t target) const {
    GeneralModel out;
    enumerate(source, [&](const GeneralModel& g, std::uint64_t ordinal) {
      if (ordinal != target) return true;
      out = g;
      return false;
    });
    return out;
  }

  std::vector<int> sources(ModelClass cls) const {
    std::vector<int> out;
    const bool general = opt.source != FamilySource::Intended && cls != ModelClass::Intended;
    const bool intended = opt.source != FamilySource::General;
    if (general) out.push_back(0);
    if (intended) out.push_back(1);
    return out;
  }

  SweepResult sweep(const std::string& label, const std::vector<Schema>& premises, const std::vector<Schema>& schemas,
                    ModelClass cls) {
    const Program prog = compile(premises, schemas);
    SweepResult res;
    res.name = label;
    res.cls = cls;
    const std::size_t ci = class_index(cls);
    const unsigned pat = prog.uses;
    const std::size_t atom_count = opt.bounds.atoms.size();
    int realize_attempts = 0;
    for (int source : sources(cls)) {
      build(source, 1U << pat);
      for (const auto& [n, count] : frames[source][ci]) {
        res.frames += count;
        res.models += count * pow_u64(std::uint64_t{1} << n, atom_count);
      }
      if (res.counterexample) continue;
      const KeySet& ks = keys[source][ci][pat];
      for (std::uint64_t key : ks.order) {
        const Tables tb = unpack(key);
        std::vector<std::uint64_t> domain(std::size_t{1} << tb.n);
        for (std::size_t s = 0; s < domain.size(); ++s) domain[s] = s;
        // Failures are enumerated one assignment at a time so that an
        // assignment without a definable witness does not hide a later one.
        std::uint64_t inst = 0;
        auto failure = check_structure(prog, tb, domain, inst);
        res.instances += inst;
        if (!failure) continue;
        std::optional<Counterexample> cx;
        if (realize_attempts++ < 64) {
          const GeneralModel frame = frame_at(source, ks.first.at(key));
          cx = realize_on_frame(frame, prog, premises, schemas, *failure, opt);
        }
        if (cx) {
          res.counterexample = std::move(cx);
          break;
        }
        ++res.undefinable_failures;
      }
    }
    if (opt.random_models > 0 && !res.counterexample) random_sweep(prog, premises, schemas, cls, res);
    return res;
  }

  void random_sweep(const Program& prog, const std::vector<Schema>& premises, const std::vector<Schema>& schemas,
                    ModelClass cls, SweepResult& res) {
    ModelBounds r = opt.bounds;
    r.max_worlds = opt.random_max_worlds;
    r.min_worlds = 1;
    const bool intended_only = opt.source == FamilySource::Intended;
    r.class_filter = intended_only ? ModelClass::Intended : cls;
    for (std::size_t i = 0; i < opt.random_models; ++i) {
      const GeneralModel g = random_model(opt.seed + i, r);
      if (intended_only && !in_class(g, cls)) continue;
      ++res.models;
      Evaluator ev(g, Mode::Explicit);
      std::array<Table, 4> owned{modal_table(ev, Op::BoxA, Op::DiaA), Table{}, Table{}, Table{}};
      if (prog.uses & kUsesE) owned[kE] = modal_table(ev, Op::BoxE, Op::DiaE);
      if (prog.uses & kUsesB) owned[kB] = modal_table(ev, Op::BoxB, Op::DiaB);
      if (prog.uses & kUsesP) owned[kP] = modal_table(ev, Op::BoxP, Op::DiaP);
      Tables tb;
      tb.n = g.size();
      for (int k = 0; k < 4; ++k) tb.t[k] = &owned[k];
      auto pool = definable_pool(ev, opt.bounds.atoms, opt.depth, basic_operators());
      std::vector<std::uint64_t> domain;
      for (const auto& [s, f] : pool) domain.push_back(s.mask());
      auto failure = check_structure(prog, tb, domain, res.instances);
      if (!failure) continue;
      res.counterexample = realize(g, prog, premises, schemas, *failure, pool, ev);
      return;
    }
  }
};

Sweeper::Sweeper(SweepOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}
Sweeper::~Sweeper() = default;
Sweeper::Sweeper(Sweeper&&) noexcept = default;
Sweeper& Sweeper::operator=(Sweeper&&) noexcept = default;

const SweepOptions& Sweeper::options() const { return impl_->opt; }

SweepResult Sweeper::check_axiom(const std::string& name, ModelClass cls) {
  const AxiomEntry& e = find_axiom(name);
  if (e.rule) throw Error("'" + name + "' is a rule; use check_rule");
  SweepResult r = impl_->sweep(e.name, {}, e.schemas, cls);
  r.exploration = !declared_for(e, cls);
  return r;
}

SweepResult Sweeper::check_rule(const std::string& name, ModelClass cls) {
  const AxiomEntry& e = find_axiom(name);
  if (!e.rule) throw Error("'" + name + "' is an axiom; use check_axiom");
  SweepResult r = impl_->sweep(e.name, e.premises, e.schemas, cls);
  r.exploration = !declared_for(e, cls);
  return r;
}

SweepResult Sweeper::check_schema(const std::string& label, const Schema& schema, ModelClass cls) {
  return impl_->sweep(label, {}, {schema}, cls);
}

std::vector<SweepResult> Sweeper::soundness() {
  std::vector<SweepResult> out;
  for (const auto& e : axiom_registry()) {
    std::vector<ModelClass> classes = e.classes;
    for (ModelClass c : classes) out.push_back(e.rule ? check_rule(e.name, c) : check_axiom(e.name, c));
  }
  return out;
}

SweepResult check_axiom(const std::string& name, ModelClass cls, const SweepOptions& options) {
  Sweeper s(options);
  return s.check_axiom(name, cls);
}

SweepResult check_rule(const std::string& name, const SweepOptions& options) {
  Sweeper s(options);
  return s.check_rule(name);
}

// ---------------------------------------------------------------------------

std::vector<Formula> default_recursion_instances() {
  return {parse("p"), parse("q"), parse("p & q"), parse("~p")};
}

const std::vector<RecursionLaw>& recursion_laws() {
  static const std::vector<RecursionLaw> laws = [] {
    auto law = [](std::string name, const char* text, std::vector<std::string> atom_slots = {}) {
      return RecursionLaw{std::move(name), parse_schema(text), std::move(atom_slots)};
    };
    return std::vector<RecursionLaw>{
        law("atoms", "[+F]G <-> (<A>F -> G)", {"G"}),
        law("conjunction", "[+F](G & H) <-> ([+F]G & [+F]H)"),
        law("negation", "[+F]~G <-> (<A>F -> ~[+F]G)"),
        law("evidence", "[+F][E]G <-> (<A>F -> ([E][+F]G | [A](F -> [+F]G)))"),
        law("universal", "[+F][A]G <-> (<A>F -> [A][+F]G)"),
        law("belief", "[+F][B]G <-> (<A>F -> (B{F; true}[+F]G & B{true; ~F}[+F]G))"),
        law("conditional",
            "[+F]B{G; H}K <-> (<A>F -> (B{F & [+F]G; [+F]H}[+F]K & B{[+F]G; ~F & [+F]H}[+F]K))"),
    };
  }();
  return laws;
}

std::vector<SweepResult> recursion_suite(const SweepOptions& options, const std::vector<Formula>& instances) {
  const auto& laws = recursion_laws();
  std::vector<std::vector<Formula>> inst(laws.size());
  std::vector<Formula> atom_formulas;
  for (const auto& a : options.bounds.atoms) atom_formulas.push_back(Formula::atom(a));
  for (std::size_t l = 0; l < laws.size(); ++l) {
    const auto metas = metavariables_of(laws[l].schema);
    std::vector<std::string> names(metas.begin(), metas.end());
    std::vector<const std::vector<Formula>*> domains;
    for (const auto& m : names) {
      const bool atom_slot =
          std::find(laws[l].atom_slots.begin(), laws[l].atom_slots.end(), m) != laws[l].atom_slots.end();
      domains.push_back(atom_slot ? &atom_formulas : &instances);
    }
    std::vector<std::size_t> idx(names.size(), 0);
    bool empty = false;
    for (const auto* d : domains) empty |= d->empty();
    while (!empty) {
      Binding b;
      for (std::size_t i = 0; i < names.size(); ++i) b[names[i]] = (*domains[i])[idx[i]];
      inst[l].push_back(instantiate(laws[l].schema, b));
      std::size_t j = names.size();
      while (j > 0) {
        --j;
        if (++idx[j] < domains[j]->size()) break;
        idx[j] = 0;
        if (j == 0) empty = true;
      }
      if (names.empty()) break;
    }
  }
  std::vector<SweepResult> out(laws.size());
  for (std::size_t l = 0; l < laws.size(); ++l) {
    out[l].name = laws[l].name;
    out[l].cls = ModelClass::Intended;
  }
  ModelBounds b = options.bounds;
  b.class_filter = ModelClass::All;
  for_each_evidence_model(b, [&](const EvidenceModel& m) {
    Evaluator ev(m);
    const WorldSet u = ev.universe();
    for (std::size_t l = 0; l < laws.size(); ++l) {
      SweepResult& r = out[l];
      ++r.models;
      if (r.counterexample) continue;
      for (const auto& f : inst[l]) {
        ++r.instances;
        const WorldSet t = ev.truth_set(f);
        if (t != u) {
          r.counterexample = Counterexample{lift(m), (u - t).first(), f, {}};
          break;
        }
      }
    }
    return true;
  });
  for (auto& r : out) r.frames = 0;
  return out;
}

HarmonySweep harmony_sweep(const ModelBounds& bounds) {
  HarmonySweep out;
  ModelBounds b = bounds;
  b.atoms.clear();
  b.class_filter = ModelClass::All;
  for_each_evidence_model(b, [&](const EvidenceModel& m) {
    ++out.frames;
    const std::uint64_t size = std::uint64_t{1} << m.size();
    for (std::uint64_t x = 1; x < size; ++x) {
      ++out.checks;
      const WorldSet xs = WorldSet::from_mask(x);
      if (!harmony_check(m, xs)) {
        out.mismatch = std::make_pair(m, xs);
        return false;
      }
    }
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

EvidenceModel counter_belief_model() {
  EvidenceModel m(6);
  m.set_uniform_evidence({WorldSet::full(6), WorldSet{0, 1}, WorldSet{1, 2}, WorldSet{3, 4}, WorldSet{4, 5}});
  m.valuation["p"] = WorldSet{1, 2, 3};
  m.valuation["q"] = WorldSet{1, 4};
  return m;
}

EvidenceModel staircase_model() {
  EvidenceModel m(4);
  m.set_uniform_evidence({WorldSet::full(4), WorldSet{0, 1}, WorldSet{1, 2}, WorldSet{2, 3}});
  m.valuation["p"] = WorldSet{1, 2};
  return m;
}

GeneralModel constraint_violation_model() {
  EvidenceModel e(2);
  e.names = {"w", "v"};
  GeneralModel g{e, Relation::from_pairs(2, {{0, 0}}), Relation::total(2)};
  return g;
}

GeneralModel one_point_model() {
  EvidenceModel e(1);
  return GeneralModel{e, Relation::identity(1), Relation::identity(1)};
}

namespace {

std::string show(const EvidenceModel& m, const WorldSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](World w) {
    if (!first) out += ",";
    first = false;
    out += m.names[w];
  });
  return out + "}";
}

}  // namespace

std::vector<ExampleCheck> reference_examples() {
  std::vector<ExampleCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail) { out.push_back({std::move(name), ok, std::move(detail)}); };

  const EvidenceModel cb = counter_belief_model();
  {
    Evaluator ev(cb);
    const WorldSet u = ev.universe();
    const WorldSet bq = ev.truth_set(parse("[B] q"));
    add("counter-belief: [B] q holds at every world", bq == u, "[[ [B] q ]] = " + show(cb, bq));
    const WorldSet split = ev.truth_set(parse("B{p} q | B{~p} q"));
    add("counter-belief: B{p} q | B{~p} q fails at every world", split.empty(),
        "[[ B{p} q | B{~p} q ]] = " + show(cb, split));
    const WorldSet mono = ev.truth_set(parse("[B] q -> B{p} q"));
    add("counter-belief: [B] q -> B{p} q is not valid", mono != u, "[[ [B] q -> B{p} q ]] = " + show(cb, mono));
    const WorldSet lhs = ev.truth_set(parse("[A]<P>[P]q"));
    add("counter-belief: [A]<P>[P]q and [B]q agree", lhs == bq,
        show(cb, lhs) + " vs " + show(cb, bq));
    const ClassReport rep = validate(lift(cb));
    add("counter-belief: lift is valid, flat and uniform", rep.valid && rep.flat && rep.uniform,
        std::string(rep.valid ? "valid" : "invalid") + (rep.flat ? ", flat" : "") + (rep.uniform ? ", uniform" : ""));
    add("counter-belief: range(B) equals the maximal worlds",
        derived_belief(cb).range() == maximal_worlds(derived_plausibility(cb)),
        show(cb, derived_belief(cb).range()) + " vs " + show(cb, maximal_worlds(derived_plausibility(cb))));
  }

  const GeneralModel bad = constraint_violation_model();
  {
    const ClassReport rep = validate(bad);
    bool c3 = false;
    for (const auto& v : rep.violations)
      if (v.rule == "constraint 3") c3 = true;
    add("constraint-3 structure is rejected", !rep.valid && c3,
        rep.violations.empty() ? "no violation" : rep.violations.front().rule + ": " + rep.violations.front().detail);
  }

  const EvidenceModel sp = staircase_model();
  {
    const Relation order = derived_plausibility(sp);
    Relation expected = Relation::identity(4);
    expected.add(0, 1);
    expected.add(3, 2);
    add("staircase: derived order is reflexive plus 1<=2 and 4<=3", order == expected, "");
    Evaluator ev(sp);
    const WorldSet pp = ev.truth_set(parse("[P] p"));
    add("staircase: [[ [P] p ]] = {2,3}", pp == WorldSet{1, 2}, show(sp, pp));
    const Family rel = reliable_evidence(sp, 2);
    add("staircase: reliable evidence at 3 is {W, {2,3}, {3,4}}",
        rel == normalized({WorldSet::full(4), WorldSet{1, 2}, WorldSet{2, 3}}), "");
    add("staircase: harmony for x = {2,3}", harmony_check(sp, WorldSet{1, 2}), "");
  }

  const GeneralModel one = one_point_model();
  {
    const ClassReport rep = validate(one);
    add("one-point model is valid, flat, uniform and concise", rep.valid && rep.flat && rep.uniform && rep.concise,
        "");
  }
  return out;
}

}  // namespace evlogic
