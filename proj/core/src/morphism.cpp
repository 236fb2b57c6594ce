#include "evlogic/morphism.hpp"

#include <set>

#include "evlogic/error.hpp"
#include "evlogic/semantics.hpp"

namespace evlogic {

bool PMorphismReport::passed() const { return failure() == nullptr; }

const ClauseResult* PMorphismReport::failure() const {
  for (const auto& c : clauses)
    if (c.in_scope && !c.passed) return &c;
  return nullptr;
}

PMorphism identity_pmorphism(const GeneralModel& m) {
  PMorphism p{m, m, {}};
  for (World w = 0; w < m.size(); ++w) p.map.push_back(w);
  return p;
}

namespace {

void check_total(const PMorphism& p) {
  if (p.map.size() != p.source.size()) throw Error("map is not total on the source worlds");
  for (World v : p.map)
    if (v >= p.target.size()) throw Error("map sends a world outside the target");
}

WorldSet image(const PMorphism& p, const WorldSet& x) {
  WorldSet out;
  x.for_each([&](World w) { out.insert(p.map[w]); });
  return out;
}

WorldSet preimage(const PMorphism& p, const WorldSet& y) {
  WorldSet out;
  for (World w = 0; w < p.map.size(); ++w)
    if (y.contains(p.map[w])) out.insert(w);
  return out;
}

bool surjective(const PMorphism& p) { return image(p, p.source.universe()) == p.target.universe(); }

ClauseResult named(std::string clause) {
  ClauseResult c;
  c.clause = std::move(clause);
  return c;
}

void fail(ClauseResult& c, std::vector<World> witness, std::string detail) {
  if (!c.passed) return;  // keep the first witness
  c.passed = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

ClauseResult atoms_clause(const PMorphism& p) {
  ClauseResult c = named("atoms");
  std::set<std::string> atoms;
  for (const auto& [a, s] : p.source.base.valuation) atoms.insert(a);
  for (const auto& [a, s] : p.target.base.valuation) atoms.insert(a);
  for (const auto& a : atoms) {
    const WorldSet lhs = p.source.base.atom(a) & p.source.universe();
    const WorldSet rhs = preimage(p, p.target.base.atom(a));
    if (lhs != rhs) {
      const WorldSet diff = (lhs - rhs) | (rhs - lhs);
      const World w = diff.first();
      fail(c, {w, p.map[w]}, "V(" + a + ") differs at source world " + p.source.base.names[w]);
    }
  }
  return c;
}

void relation_clauses(const PMorphism& p, const std::optional<Relation>& r1, const std::optional<Relation>& r2,
                      const std::string& tag, std::vector<ClauseResult>& out) {
  ClauseResult forth = named("forth_" + tag);
  ClauseResult back = named("back_" + tag);
  if (!r1 || !r2) {
    forth.in_scope = back.in_scope = false;
    forth.detail = back.detail = "relation missing in one model";
  } else {
    for (World w = 0; w < p.source.size(); ++w) {
      r1->successors(w).for_each([&](World v) {
        if (!r2->contains(p.map[w], p.map[v]))
          fail(forth, {w, v}, p.source.base.names[w] + " " + tag + " " + p.source.base.names[v] + " not preserved");
      });
      const WorldSet reach = image(p, r1->successors(w));
      const WorldSet missing = r2->successors(p.map[w]) - reach;
      if (!missing.empty()) {
        const World u = missing.first();
        fail(back, {w, p.map[w], u},
             "no " + tag + "-successor of " + p.source.base.names[w] + " maps to " + p.target.base.names[u]);
      }
    }
  }
  out.push_back(std::move(forth));
  out.push_back(std::move(back));
}

void evidence_clauses(const PMorphism& p, std::vector<ClauseResult>& out) {
  ClauseResult forth = named("forth_E");
  ClauseResult back = named("back_E");
  for (World w = 0; w < p.source.size(); ++w) {
    const Family& e1 = p.source.base.evidence[w];
    const Family& e2 = p.target.base.evidence[p.map[w]];
    for (const auto& x : e1) {
      const WorldSet img = image(p, x);
      bool found = false;
      for (const auto& y : e2)
        if (y.subset_of(img)) {
          found = true;
          break;
        }
      if (!found) fail(forth, {w}, "an evidence set of " + p.source.base.names[w] + " has no target witness");
    }
    for (const auto& y : e2) {
      bool found = false;
      for (const auto& x : e1)
        if (image(p, x).subset_of(y)) {
          found = true;
          break;
        }
      if (!found) fail(back, {w, p.map[w]}, "an evidence set of the image of " + p.source.base.names[w] + " has no source witness");
    }
  }
  out.push_back(std::move(forth));
  out.push_back(std::move(back));
}

}  // namespace

PMorphismReport check_pmorphism(const PMorphism& p) {
  check_total(p);
  PMorphismReport rep;
  rep.surjective = surjective(p);
  rep.clauses.push_back(atoms_clause(p));
  relation_clauses(p, p.source.belief, p.target.belief, "B", rep.clauses);
  evidence_clauses(p, rep.clauses);
  relation_clauses(p, p.source.plausibility, p.target.plausibility, "P", rep.clauses);
  return rep;
}

TruthPreservation verify_truth_preservation(const PMorphism& p, const std::vector<Formula>& formulas) {
  check_total(p);
  Signature shared;
  shared.e = true;
  shared.a = surjective(p);
  shared.b = p.source.belief && p.target.belief;
  shared.p = p.source.plausibility && p.target.plausibility;
  for (const auto& f : formulas) {
    if (!is_basic(f)) throw SignatureError("truth preservation is checked for basic formulas only: " + render(f));
    if (!signature_of(f).subset_of(shared))
      throw SignatureError("formula " + render(f) + " uses modalities outside the shared signature " + shared.str());
  }
  Evaluator src(p.source, Mode::Explicit);
  Evaluator tgt(p.target, Mode::Explicit);
  TruthPreservation out;
  for (const auto& f : formulas) {
    const WorldSet lhs = src.truth_set(f);
    const WorldSet rhs = preimage(p, tgt.truth_set(f));
    if (lhs != rhs) {
      out.holds = false;
      out.formula = f;
      out.world = ((lhs - rhs) | (rhs - lhs)).first();
      return out;
    }
  }
  return out;
}

TruthPreservation verify_truth_preservation_up_to(const PMorphism& p, const std::vector<std::string>& atoms,
                                                  int depth) {
  check_total(p);
  OperatorSet ops = boolean_operators();
  ops.push_back(Op::BoxE);
  ops.push_back(Op::DiaE);
  if (surjective(p)) {
    ops.push_back(Op::BoxA);
    ops.push_back(Op::DiaA);
  }
  if (p.source.belief && p.target.belief) {
    ops.push_back(Op::BoxB);
    ops.push_back(Op::DiaB);
  }
  if (p.source.plausibility && p.target.plausibility) {
    ops.push_back(Op::BoxP);
    ops.push_back(Op::DiaP);
  }
  Evaluator src(p.source, Mode::Explicit);
  Evaluator tgt(p.target, Mode::Explicit);
  const WorldSet us = src.universe();
  const WorldSet ut = tgt.universe();
  struct Entry {
    WorldSet s, t;
    Formula f;
  };
  std::vector<Entry> pool;
  std::set<std::pair<WorldSet, WorldSet>> seen;
  TruthPreservation out;
  auto offer = [&](const WorldSet& s, const WorldSet& t, const Formula& f) {
    if (!out.holds || !seen.insert({s, t}).second) return;
    pool.push_back({s, t, f});
    const WorldSet rhs = preimage(p, t);
    if (s != rhs) {
      out.holds = false;
      out.formula = f;
      out.world = ((s - rhs) | (rhs - s)).first();
    }
  };
  for (const auto& a : atoms) {
    const Formula f = Formula::atom(a);
    offer(src.truth_set(f), tgt.truth_set(f), f);
  }
  offer(us, ut, Formula::top());
  offer(WorldSet{}, WorldSet{}, Formula::bottom());
  for (int d = 1; d <= depth && out.holds; ++d) {
    const std::size_t prev = pool.size();
    for (Op op : ops) {
      if (arity(op) == 1) {
        for (std::size_t i = 0; i < prev && out.holds; ++i) {
          const Entry e = pool[i];
          if (op == Op::Not)
            offer(us - e.s, ut - e.t, neg(e.f));
          else
            offer(src.modal(op, e.s), tgt.modal(op, e.t), Formula::make(op, {e.f}));
        }
        continue;
      }
      for (std::size_t i = 0; i < prev && out.holds; ++i)
        for (std::size_t j = 0; j < prev && out.holds; ++j) {
          const Entry a = pool[i];
          const Entry b = pool[j];
          const Formula f = Formula::make(op, {a.f, b.f});
          switch (op) {
            case Op::And: offer(a.s & b.s, a.t & b.t, f); break;
            case Op::Or: offer(a.s | b.s, a.t | b.t, f); break;
            case Op::Implies: offer((us - a.s) | b.s, (ut - a.t) | b.t, f); break;
            default: offer(us - (a.s - b.s) - (b.s - a.s), ut - (a.t - b.t) - (b.t - a.t), f); break;
          }
        }
    }
    if (pool.size() == prev) break;
  }
  return out;
}

std::optional<PMorphism> find_surjective_pmorphism(const GeneralModel& m1, const GeneralModel& m2, std::size_t bound) {
  const std::size_t n1 = m1.size();
  const std::size_t n2 = m2.size();
  if (n1 > bound) throw Error("source model exceeds the search bound of " + std::to_string(bound) + " worlds");
  if (n2 > n1 || n2 == 0) return std::nullopt;
  // Candidate targets per world: same atom profile.
  std::set<std::string> atoms;
  for (const auto& [a, s] : m1.base.valuation) atoms.insert(a);
  for (const auto& [a, s] : m2.base.valuation) atoms.insert(a);
  std::vector<std::vector<World>> cand(n1);
  for (World w = 0; w < n1; ++w)
    for (World v = 0; v < n2; ++v) {
      bool same = true;
      for (const auto& a : atoms)
        if (m1.base.atom(a).contains(w) != m2.base.atom(a).contains(v)) same = false;
      if (same) cand[w].push_back(v);
    }
  for (const auto& c : cand)
    if (c.empty()) return std::nullopt;
  PMorphism p{m1, m2, std::vector<World>(n1, 0)};
  std::vector<std::size_t> idx(n1, 0);
  while (true) {
    for (World w = 0; w < n1; ++w) p.map[w] = cand[w][idx[w]];
    if (surjective(p) && check_pmorphism(p).passed()) return p;
    // Advance the last coordinate first: lexicographic order.
    std::size_t k = n1;
    while (k > 0) {
      --k;
      if (++idx[k] < cand[k].size()) break;
      idx[k] = 0;
      if (k == 0) return std::nullopt;
    }
  }
}

PMorphism compose(const PMorphism& pi, const PMorphism& rho) {
  if (pi.target.size() != rho.source.size()) throw Error("cannot compose: middle models differ in size");
  PMorphism out{pi.source, rho.target, {}};
  for (World w : pi.map) out.map.push_back(rho.map.at(w));
  return out;
}

}  // namespace evlogic
