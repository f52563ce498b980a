#include "ialc/golden.h"

#include "ialc/parser.h"

namespace ialc {

namespace {

ProofTree N(const char* rule, const char* conclusion, std::vector<ProofTree> premises = {}) {
  return ProofTree{ParseSequent(conclusion), *ParseRuleId(rule), {}, std::move(premises)};
}

ProofTree Axiom1() {
  return N("sub-r", "all R.(A -> B) |- some R.A -> some R.B",
           {N("p-exists", "all R.(A -> B); some R.A |- some R.B",
              {N("sub-l", "A -> B; A |- B", {N("axiom", "A |- A"), N("axiom", "B |- B")})})});
}

ProofTree Axiom2() {
  return N("sub-r", "all R.(A -> B) |- all R.A -> all R.B",
           {N("p-forall", "all R.(A -> B); all R.A |- all R.B",
              {N("sub-l", "A -> B; A |- B", {N("axiom", "A |- A"), N("axiom", "B |- B")})})});
}

ProofTree Axiom3() {
  return N("n-sub-r", "|- x : (some R.bot -> bot)",
           {N("exists-l", "x : some R.bot |- x : bot", {N("n-bot-l", "R(x,y); y : bot |- x : bot")})});
}

// exists-l opens the witness before splitting the disjunction; a direct
// or-l on x : some R.(A | B) is not an instance of any rule.
ProofTree Axiom4() {
  auto side = [](const char* or_rule, const char* body, const char* goal, const char* witness) {
    const std::string ante = std::string("R(x,y); y : ") + body;
    return N(or_rule, (ante + " |- x : (some R.A | some R.B)").c_str(),
             {N("exists-r", (ante + " |- " + goal).c_str(),
                {N("axiom", (ante + " |- R(x,y)").c_str()), N("n-axiom", (ante + " |- " + witness).c_str())})});
  };
  return N("exists-l", "x : some R.(A | B) |- x : (some R.A | some R.B)",
           {N("n-or-l", "R(x,y); y : A | B |- x : (some R.A | some R.B)",
              {side("n-or1-r", "A", "x : some R.A", "y : A"), side("n-or2-r", "B", "x : some R.B", "y : B")})});
}

ProofTree Axiom5() {
  return N(
      "n-sub-r", "|- x : ((some R.A -> all R.B) -> all R.(A -> B))",
      {N("forall-r", "x : (some R.A -> all R.B) |- x : all R.(A -> B)",
         {N("n-sub-r", "x : (some R.A -> all R.B); R(x,y) |- y : (A -> B)",
            {N("n-sub-l", "x : (some R.A -> all R.B); R(x,y); y : A |- y : B",
               {N("exists-r", "R(x,y); y : A |- x : some R.A",
                  {N("axiom", "R(x,y); y : A |- R(x,y)"), N("n-axiom", "R(x,y); y : A |- y : A")}),
                N("forall-l", "R(x,y); y : A; x : all R.B |- y : B",
                  {N("n-axiom", "R(x,y); y : A; y : B; x : all R.B |- y : B")})})})})});
}

}  // namespace

std::vector<GoldenDerivation> GoldenDerivations() {
  return {{"axiom1", Axiom1()}, {"axiom2", Axiom2()}, {"axiom3", Axiom3()}, {"axiom4", Axiom4()},
          {"axiom5", Axiom5()}};
}

}  // namespace ialc
