#include <gtest/gtest.h>

#include <random>
#include <set>

#include "evlogic/error.hpp"
#include "evlogic/formula.hpp"

using namespace evlogic;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

// Random formula over the full language, for round trips.
Formula random_formula(std::mt19937_64& rng, int depth) {
  const std::vector<std::string> atoms{"p", "q", "r1"};
  if (depth == 0 || rng() % 4 == 0) {
    switch (rng() % 5) {
      case 0: return Formula::top();
      case 1: return Formula::bottom();
      default: return Formula::atom(atoms[rng() % atoms.size()]);
    }
  }
  const auto sub = [&] { return random_formula(rng, depth - 1); };
  switch (rng() % 9) {
    case 0: return neg(sub());
    case 1: return conj(sub(), sub());
    case 2: return disj(sub(), sub());
    case 3: return implies(sub(), sub());
    case 4: return iff(sub(), sub());
    case 5: return cond_belief(sub(), sub());
    case 6: return cond_belief2(sub(), sub(), sub());
    case 7: return add_evidence(sub(), sub());
    default: {
      const std::vector<Op> ops{Op::BoxB, Op::DiaB, Op::BoxE, Op::DiaE, Op::BoxA,
                                Op::DiaA, Op::BoxP, Op::DiaP, Op::BoxC, Op::BoxU};
      return modal(ops[rng() % ops.size()], sub());
    }
  }
}

}  // namespace

TEST(Parser, Precedence) {
  EXPECT_EQ(parse("p & q | r"), disj(conj(p(), q()), Formula::atom("r")));
  EXPECT_EQ(parse("p -> q -> r"), implies(p(), implies(q(), Formula::atom("r"))));
  EXPECT_EQ(parse("p <-> q -> p"), iff(p(), implies(q(), p())));
  EXPECT_EQ(parse("~p & q"), conj(neg(p()), q()));
  EXPECT_EQ(parse("[B] p & q"), conj(modal(Op::BoxB, p()), q()));
  EXPECT_EQ(parse("<E>~p"), modal(Op::DiaE, neg(p())));
}

TEST(Parser, ExtendedOperators) {
  EXPECT_EQ(parse("B{p} q"), cond_belief(p(), q()));
  EXPECT_EQ(parse("B{p; q} p"), cond_belief2(p(), q(), p()));
  EXPECT_EQ(parse("[+p] [B] q"), add_evidence(p(), modal(Op::BoxB, q())));
  EXPECT_EQ(parse("[C] p | [U] q"), disj(modal(Op::BoxC, p()), modal(Op::BoxU, q())));
}

TEST(Parser, FullwidthSemicolon) { EXPECT_EQ(parse("B{p\xEF\xBC\x9Bq} p"), parse("B{p; q} p")); }

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse("p & & q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 4u);
  }
  EXPECT_THROW(parse("(p"), ParseError);
  EXPECT_THROW(parse("p q"), ParseError);
  EXPECT_THROW(parse("<C> p"), ParseError);
  EXPECT_THROW(parse("F -> G"), ParseError);
}

TEST(Parser, Schemas) {
  const Schema s = parse_schema("[E]F -> <B>F");
  EXPECT_TRUE(s.has_meta());
  EXPECT_EQ(metavariables_of(s), (std::set<std::string>{"F"}));
  const Formula f = instantiate(s, {{"F", conj(p(), q())}});
  EXPECT_EQ(f, parse("[E](p & q) -> <B>(p & q)"));
  EXPECT_FALSE(f.has_meta());
  EXPECT_THROW(instantiate(s, {}), Error);
}

TEST(Parser, RenderRoundTripsRandomFormulas) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, 4);
    const std::string text = render(f);
    EXPECT_EQ(parse(text), f) << text;
  }
}

TEST(Formula, StructuralEqualityAndMeasures) {
  const Formula a = parse("[B](p & q)");
  const Formula b = modal(Op::BoxB, conj(p(), q()));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.depth(), 2);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(subformulas(a).size(), 4u);
  EXPECT_EQ(subformulas(a).back(), a);
  EXPECT_EQ(atoms_of(parse("p & [B](q | p)")), (std::set<std::string>{"p", "q"}));
}

TEST(Formula, SignatureAndBasic) {
  EXPECT_EQ(signature_of(parse("[B] p & <P> q")).str(), signature_of(parse("<B> q & [P] p")).str());
  const Signature s = signature_of(parse("[A] p & [E] q"));
  EXPECT_TRUE(s.a && s.e && !s.b && !s.p);
  EXPECT_TRUE(signature_of(parse("B{p} q")).e);
  EXPECT_TRUE(is_basic(parse("[A]<P>[P]p -> [B]p")));
  EXPECT_FALSE(is_basic(parse("[C] p")));
  EXPECT_FALSE(is_basic(parse("[+p] q")));
}

TEST(Enumerate, CountsMatchClosedForm) {
  // Depth 0: atoms plus true and false. Each further level applies every
  // unary operator to every formula and every binary operator to every
  // ordered pair, then removes what is already present.
  const std::vector<std::string> atoms{"p", "q"};
  const std::size_t d0 = atoms.size() + 2;
  EXPECT_EQ(enumerate_formulas(atoms, 0, boolean_operators()).size(), d0);
  const std::size_t d1 = d0 + 1 * d0 + 4 * d0 * d0;
  EXPECT_EQ(enumerate_formulas(atoms, 1, boolean_operators()).size(), d1);
  const std::size_t basic1 = d0 + 9 * d0 + 4 * d0 * d0;
  EXPECT_EQ(enumerate_formulas(atoms, 1, basic_operators()).size(), basic1);
}

TEST(Enumerate, DepthTwoMatchesBruteForce) {
  const std::vector<std::string> atoms{"p"};
  std::set<std::string> level{"p", "true", "false"};
  std::set<std::string> all = level;
  std::vector<Formula> prev{p(), Formula::top(), Formula::bottom()};
  std::vector<Formula> pool = prev;
  for (int d = 1; d <= 2; ++d) {
    std::vector<Formula> next;
    for (const auto& a : pool) {
      next.push_back(neg(a));
      next.push_back(modal(Op::BoxB, a));
      for (const auto& b : pool) next.push_back(conj(a, b));
    }
    for (const auto& f : next)
      if (all.insert(render(f)).second) pool.push_back(f);
  }
  const auto got = enumerate_formulas(atoms, 2, {Op::Not, Op::And, Op::BoxB});
  EXPECT_EQ(got.size(), all.size());
  for (const auto& f : got) {
    EXPECT_LE(f.depth(), 2);
    EXPECT_TRUE(all.count(render(f))) << render(f);
  }
}
