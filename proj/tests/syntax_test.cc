#include <gtest/gtest.h>

#include "ialc/parser.h"
#include "ialc/syntax.h"
#include "support.h"

namespace ialc {
namespace {

const Concept A = Concept::Atom("A");
const Concept B = Concept::Atom("B");
const Concept C = Concept::Atom("C");

TEST(Parse, Constants) {
  EXPECT_EQ(ParseFormula("top"), Formula(Concept::Top()));
  EXPECT_EQ(ParseFormula("bot"), Formula(Concept::Bot()));
}

TEST(Parse, ForallOverSubsumption) {
  EXPECT_EQ(ParseFormula("all R.(A -> B)"), Formula(Concept::Forall("R", Concept::Subs(A, B))));
}

TEST(Parse, NestedNominalAssertion) {
  const Formula f = ParseFormula("x : (y : A)");
  ASSERT_TRUE(f.is_nominal());
  EXPECT_EQ(f.nominal(), "x");
  ASSERT_TRUE(f.body().is_nominal());
  EXPECT_EQ(f.body().nominal(), "y");
  EXPECT_EQ(f.body().body(), Formula(A));
  EXPECT_EQ(f, Formula::At("x", Formula::At("y", A)));
  EXPECT_EQ(ParseFormula("x : y : A"), f);
}

TEST(Parse, RoleAssertion) {
  const Formula f = ParseFormula("R(x,y)");
  ASSERT_TRUE(f.is_role());
  EXPECT_EQ(f.nominal(), "x");
  EXPECT_EQ(f.role(), "R");
  EXPECT_EQ(f.object(), "y");
}

TEST(Parse, Precedence) {
  EXPECT_EQ(ParseConcept("not A & B | C -> A"),
            Concept::Subs(Concept::Or(Concept::And(Concept::Not(A), B), C), A));
  EXPECT_EQ(ParseConcept("A -> B -> C"), Concept::Subs(A, Concept::Subs(B, C)));
  EXPECT_EQ(ParseConcept("A & B & C"), Concept::And(Concept::And(A, B), C));
  EXPECT_EQ(ParseConcept("A | B | C"), Concept::Or(Concept::Or(A, B), C));
  // The quantifier body stops at the next binary operator.
  EXPECT_EQ(ParseConcept("some R.A & B"), Concept::And(Concept::Exists("R", A), B));
  EXPECT_EQ(ParseConcept("all R.not A"), Concept::Forall("R", Concept::Not(A)));
}

TEST(Parse, Sequents) {
  const Sequent s = ParseSequent("all R.(A -> B) |- some R.A -> some R.B");
  EXPECT_EQ(s.antecedent, FormulaSet{Formula(Concept::Forall("R", Concept::Subs(A, B)))});
  EXPECT_EQ(s.succedent, Formula(Concept::Subs(Concept::Exists("R", A), Concept::Exists("R", B))));

  const Sequent bot = ParseSequent("x:bot |- A");
  EXPECT_EQ(bot.antecedent, FormulaSet{Formula::At("x", Concept::Bot())});
  EXPECT_EQ(bot.succedent, Formula(A));

  const Sequent id = ParseSequent("A |- A");
  EXPECT_EQ(id.antecedent, FormulaSet{Formula(A)});

  EXPECT_EQ(ParseSequent("A; A; B |- A").antecedent.size(), 2U);
  EXPECT_TRUE(ParseSequent("|- A").antecedent.empty());
}

TEST(Parse, ProblemFile) {
  const Problem p = ParseProblem(
      "# comment\n"
      "theory:\n"
      "  A -> B   # trailing comment\n"
      "assume:\n"
      "  x : A\n"
      "  R(x,y)\n"
      "goal:\n"
      "  x : B\n");
  ASSERT_EQ(p.theory.size(), 1U);
  ASSERT_EQ(p.assumptions.size(), 2U);
  EXPECT_EQ(p.goal, Formula::At("x", B));
  const Sequent s = p.AsSequent();
  EXPECT_EQ(s.antecedent.size(), 3U);
  EXPECT_EQ(s.succedent, Formula::At("x", B));
}

TEST(Parse, ProblemNeedsExactlyOneGoal) {
  EXPECT_THROW(ParseProblem("theory:\n  A\n"), ParseError);
  EXPECT_THROW(ParseProblem("goal:\n  A\n  B\n"), ParseError);
  EXPECT_THROW(ParseProblem("A\n"), ParseError);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    ParseFormula("A & ");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_NE(std::string(e.what()).find("line 1, column 5"), std::string::npos);
  }
  try {
    ParseProblem("goal:\n  A &| B\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 6);
  }
}

TEST(Parse, RejectsMalformedInput) {
  for (const char* bad : {"", "(", "A)", "some R A", "some r.A", "x :", "R(x)", "R(x,Y)", "A |- ", "|-", "X : A",
                          "x : R(x,y)", "A -> ", "not", "A B", "all .A", "A ; B", "x", "&"}) {
    EXPECT_THROW(ParseSequent(bad), ParseError) << bad;
  }
  EXPECT_THROW(ParseFormula("x : R(x,y)"), ParseError);
}

TEST(Render, MinimalParentheses) {
  EXPECT_EQ(Render(Concept::Forall("R", Concept::Subs(A, B))), "all R.(A -> B)");
  EXPECT_EQ(Render(Concept::Subs(Concept::Exists("R", A), Concept::Forall("R", B))), "some R.A -> all R.B");
  EXPECT_EQ(Render(Concept::And(A, Concept::Or(B, C))), "A & (B | C)");
  EXPECT_EQ(Render(Concept::Subs(Concept::Subs(A, B), C)), "(A -> B) -> C");
  EXPECT_EQ(Render(Concept::Subs(A, Concept::Subs(B, C))), "A -> B -> C");
  EXPECT_EQ(Render(Concept::Not(Concept::Not(A))), "not not A");
  EXPECT_EQ(Render(Formula::At("x", Formula::At("y", A))), "x : (y : A)");
  EXPECT_EQ(Render(Formula::Role("x", "R", "y")), "R(x,y)");
  EXPECT_EQ(Render(ParseSequent("B; A |- A")), "A; B |- A");
  EXPECT_EQ(Render(ParseSequent("|- A")), "|- A");
}

TEST(OuterNominal, AllShapes) {
  EXPECT_EQ(OuterNominal(ParseFormula("x : (y : A)")), "x");
  EXPECT_EQ(OuterNominal(ParseFormula("x : A")), "x");
  EXPECT_EQ(OuterNominal(ParseFormula("A & B")), std::nullopt);
  EXPECT_EQ(OuterNominal(ParseFormula("R(x,y)")), std::nullopt);
}

TEST(Symbols, CollectsEverything) {
  const Symbols s = CollectSymbols(ParseSequent("x : (y : some R.A); S(u,v) |- all T.B"));
  EXPECT_EQ(s.atoms, (std::set<std::string>{"A", "B"}));
  EXPECT_EQ(s.roles, (std::set<std::string>{"R", "S", "T"}));
  EXPECT_EQ(s.nominals, (std::set<std::string>{"u", "v", "x", "y"}));
}

TEST(Formula, RoleBodyIsRejected) {
  EXPECT_THROW(Formula::At("x", Formula::Role("x", "R", "y")), std::invalid_argument);
}

TEST(RoundTrip, RandomConcepts) {
  testing::Rng rng(7);
  testing::Vocabulary v{{"A", "B", "Cat"}, {"R", "Has"}, {"x", "y"}};
  for (int i = 0; i < 1000; ++i) {
    const Concept c = testing::RandomConcept(rng, 6, v);
    const std::string text = Render(c);
    ASSERT_EQ(ParseConcept(text), c) << text;
  }
}

TEST(RoundTrip, RandomFormulasAndSequents) {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    FormulaSet ante;
    const int n = testing::Pick(rng, 4);
    for (int k = 0; k < n; ++k) ante.insert(testing::RandomFormula(rng, 3));
    const Sequent s(ante, testing::RandomFormula(rng, 3));
    const std::string text = Render(s);
    ASSERT_EQ(ParseSequent(text), s) << text;
  }
}

}  // namespace
}  // namespace ialc
