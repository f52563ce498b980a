#include "ialc/calculus.h"

#include <algorithm>
#include <array>
#include <functional>

namespace ialc {

namespace {

struct RuleName {
  Rule rule;
  const char* name;
  std::size_t arity;
  bool nominal_variant;
};

constexpr std::array<RuleName, 18> kRules = {{
    {Rule::kAxiom, "axiom", 0, true},
    {Rule::kBotL, "bot-l", 0, true},
    {Rule::kForallR, "forall-r", 1, false},
    {Rule::kForallL, "forall-l", 1, false},
    {Rule::kExistsR, "exists-r", 2, false},
    {Rule::kExistsL, "exists-l", 1, false},
    {Rule::kSubR, "sub-r", 1, true},
    {Rule::kSubL, "sub-l", 2, true},
    {Rule::kAndR, "and-r", 2, true},
    {Rule::kAndL, "and-l", 1, true},
    {Rule::kOr1R, "or1-r", 1, true},
    {Rule::kOr2R, "or2-r", 1, true},
    {Rule::kOrL, "or-l", 2, true},
    {Rule::kPromoteExists, "p-exists", 1, false},
    {Rule::kPromoteForall, "p-forall", 1, false},
    {Rule::kPromoteNominal, "p-nom", 1, false},
    {Rule::kCut, "cut", 2, false},
    {Rule::kWeaken, "weaken", 1, false},
}};

const RuleName& Info(Rule rule) { return kRules[static_cast<std::size_t>(rule)]; }

using Error = std::optional<std::string>;

Formula Wrap(const std::optional<std::string>& x, const Concept& c) {
  return x ? Formula::At(*x, c) : Formula(c);
}

// The concept under the (optional) nominal label, if f has the shape the
// variant expects.
struct Labelled {
  std::optional<std::string> nominal;
  Concept c;
};

std::optional<Labelled> Unwrap(const Formula& f, bool nominal) {
  if (!nominal && f.is_concept()) return Labelled{std::nullopt, f.as_concept()};
  if (nominal && f.is_labelled_concept()) return Labelled{f.nominal(), f.body().as_concept()};
  return std::nullopt;
}

bool Contains(const FormulaSet& s, const Formula& f) { return s.count(f) > 0; }

bool SubsetOf(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FormulaSet Minus(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

FormulaSet Plus(FormulaSet a, std::initializer_list<Formula> extra) {
  a.insert(extra.begin(), extra.end());
  return a;
}

// Conclusion = Delta + K and premise = Delta + A for some context Delta.
bool Frame(const FormulaSet& conclusion, const FormulaSet& k, const FormulaSet& premise, const FormulaSet& a) {
  return SubsetOf(k, conclusion) && SubsetOf(a, premise) && SubsetOf(Minus(conclusion, k), premise) &&
         SubsetOf(Minus(premise, a), conclusion);
}

FormulaSet Promote(const FormulaSet& delta, const std::string& role) {
  FormulaSet out;
  for (const auto& f : delta) out.insert(f.is_concept() ? Formula(Concept::Forall(role, f.as_concept())) : f);
  return out;
}

FormulaSet Prefix(const FormulaSet& delta, const std::string& x) {
  FormulaSet out;
  for (const auto& f : delta) out.insert(f.is_concept() ? Formula::At(x, f.as_concept()) : f);
  return out;
}

bool Matches(const std::optional<Formula>& hint, const Formula& f) { return !hint || *hint == f; }
bool Matches(const std::optional<std::string>& hint, const std::string& s) { return !hint || *hint == s; }

Error NoInstance(RuleId id) { return "no instance of " + ToString(id) + " matches"; }

Error CheckAxiom(RuleId id, const RuleParams& p, const Sequent& c) {
  if (id.nominal != c.succedent.is_nominal())
    return std::string(id.nominal ? "n-axiom needs a nominal-assertion succedent"
                                  : "axiom with a nominal-assertion succedent is n-axiom");
  if (!Matches(p.principal, c.succedent)) return "principal is not the succedent";
  if (!Contains(c.antecedent, c.succedent)) return "succedent does not occur in the antecedent";
  return std::nullopt;
}

Error CheckBotL(RuleId id, const RuleParams& p, const Sequent& c) {
  for (const auto& f : c.antecedent) {
    auto l = Unwrap(f, id.nominal);
    if (l && l->c.is(Concept::Kind::kBot) && Matches(p.principal, f)) return std::nullopt;
  }
  return std::string(id.nominal ? "no x:bot in the antecedent" : "no bot in the antecedent");
}

Error CheckForallR(const RuleParams& p, const Sequent& prem, const Sequent& c) {
  const Formula& goal = c.succedent;
  if (!goal.is_labelled_concept() || !goal.body().as_concept().is(Concept::Kind::kForall))
    return "succedent is not x:all R.alpha";
  const std::string& x = goal.nominal();
  const Concept& forall = goal.body().as_concept();
  if (!Matches(p.principal, goal) || !Matches(p.role, forall.name())) return "params do not match the succedent";
  if (!prem.succedent.is_labelled_concept() || prem.succedent.body().as_concept() != forall.body())
    return "premise succedent is not y:alpha";
  const std::string& y = prem.succedent.nominal();
  if (!Matches(p.fresh, y)) return "premise nominal differs from the fresh nominal";
  if (prem.antecedent != Plus(c.antecedent, {Formula::Role(x, forall.name(), y)}))
    return "premise antecedent is not the conclusion antecedent plus R(x,y)";
  return std::nullopt;
}

Error CheckForallL(const RuleParams& p, const Sequent& prem, const Sequent& c) {
  if (prem.succedent != c.succedent) return "succedent changed";
  for (const auto& f : c.antecedent) {
    if (!f.is_labelled_concept() || !f.body().as_concept().is(Concept::Kind::kForall) || !Matches(p.principal, f))
      continue;
    const Concept& forall = f.body().as_concept();
    if (!Matches(p.role, forall.name())) continue;
    for (const auto& r : c.antecedent) {
      if (!r.is_role() || r.nominal() != f.nominal() || r.role() != forall.name() || !Matches(p.fresh, r.object()))
        continue;
      if (prem.antecedent == Plus(c.antecedent, {Formula::At(r.object(), forall.body())})) return std::nullopt;
    }
  }
  return NoInstance({Rule::kForallL});
}

Error CheckExistsR(const RuleParams& p, const Sequent& rel, const Sequent& body, const Sequent& c) {
  const Formula& goal = c.succedent;
  if (!goal.is_labelled_concept() || !goal.body().as_concept().is(Concept::Kind::kExists))
    return "succedent is not x:some R.alpha";
  const Concept& exists = goal.body().as_concept();
  if (!Matches(p.principal, goal) || !Matches(p.role, exists.name())) return "params do not match the succedent";
  const Formula& link = rel.succedent;
  if (!link.is_role() || link.nominal() != goal.nominal() || link.role() != exists.name())
    return "first premise succedent is not R(x,y)";
  if (!Matches(p.fresh, link.object())) return "first premise nominal differs from params";
  if (body.succedent != Formula::At(link.object(), exists.body())) return "second premise succedent is not y:alpha";
  if (rel.antecedent != c.antecedent || body.antecedent != c.antecedent) return "antecedents differ";
  return std::nullopt;
}

Error CheckExistsL(const RuleParams& p, const Sequent& prem, const Sequent& c) {
  if (prem.succedent != c.succedent) return "succedent changed";
  const std::set<std::string> used = Nominals(c);
  bool fresh_violation = false;
  for (const auto& f : c.antecedent) {
    if (!f.is_labelled_concept() || !f.body().as_concept().is(Concept::Kind::kExists) || !Matches(p.principal, f))
      continue;
    const Concept& exists = f.body().as_concept();
    if (!Matches(p.role, exists.name())) continue;
    for (const auto& r : prem.antecedent) {
      if (!r.is_role() || r.nominal() != f.nominal() || r.role() != exists.name() || !Matches(p.fresh, r.object()))
        continue;
      const std::string& y = r.object();
      if (!Frame(c.antecedent, {f}, prem.antecedent, {r, Formula::At(y, exists.body())})) continue;
      if (used.count(y)) {
        fresh_violation = true;
        continue;
      }
      return std::nullopt;
    }
  }
  if (fresh_violation) return "the introduced nominal occurs in the conclusion";
  return NoInstance({Rule::kExistsL});
}

Error CheckSubR(RuleId id, const Sequent& prem, const Sequent& c, const RuleParams& p) {
  auto l = Unwrap(c.succedent, id.nominal);
  if (!l || !l->c.is(Concept::Kind::kSubs) || !Matches(p.principal, c.succedent))
    return "succedent is not " + std::string(id.nominal ? "x:(alpha -> beta)" : "alpha -> beta");
  if (prem.succedent != Wrap(l->nominal, l->c.right())) return "premise succedent is not beta";
  if (prem.antecedent != Plus(c.antecedent, {Wrap(l->nominal, l->c.left())}))
    return "premise antecedent is not the conclusion antecedent plus alpha";
  return std::nullopt;
}

Error CheckSubL(RuleId id, const Sequent& left, const Sequent& right, const Sequent& c, const RuleParams& p) {
  if (right.succedent != c.succedent) return "second premise succedent changed";
  for (const auto& f : c.antecedent) {
    auto l = Unwrap(f, id.nominal);
    if (!l || !l->c.is(Concept::Kind::kSubs) || !Matches(p.principal, f)) continue;
    if (left.succedent != Wrap(l->nominal, l->c.left())) continue;
    const Formula beta = Wrap(l->nominal, l->c.right());
    if (!Contains(right.antecedent, beta)) continue;
    FormulaSet joined = left.antecedent;
    joined.insert(right.antecedent.begin(), right.antecedent.end());
    joined.insert(f);
    if (joined == c.antecedent) return std::nullopt;
    joined.erase(beta);
    if (Contains(left.antecedent, beta) || beta == f) continue;
    if (joined == c.antecedent) return std::nullopt;
  }
  return NoInstance(id);
}

Error CheckAndR(RuleId id, const Sequent& a, const Sequent& b, const Sequent& c, const RuleParams& p) {
  auto l = Unwrap(c.succedent, id.nominal);
  if (!l || !l->c.is(Concept::Kind::kAnd) || !Matches(p.principal, c.succedent))
    return "succedent is not a conjunction of the right variant";
  if (a.succedent != Wrap(l->nominal, l->c.left()) || b.succedent != Wrap(l->nominal, l->c.right()))
    return "premise succedents are not the conjuncts";
  if (a.antecedent != c.antecedent || b.antecedent != c.antecedent) return "antecedents differ";
  return std::nullopt;
}

Error CheckAndL(RuleId id, const Sequent& prem, const Sequent& c, const RuleParams& p) {
  if (prem.succedent != c.succedent) return "succedent changed";
  for (const auto& f : c.antecedent) {
    auto l = Unwrap(f, id.nominal);
    if (!l || !l->c.is(Concept::Kind::kAnd) || !Matches(p.principal, f)) continue;
    if (Frame(c.antecedent, {f}, prem.antecedent,
              {Wrap(l->nominal, l->c.left()), Wrap(l->nominal, l->c.right())}))
      return std::nullopt;
  }
  return NoInstance(id);
}

Error CheckOrR(RuleId id, const Sequent& prem, const Sequent& c, const RuleParams& p) {
  auto l = Unwrap(c.succedent, id.nominal);
  if (!l || !l->c.is(Concept::Kind::kOr) || !Matches(p.principal, c.succedent))
    return "succedent is not a disjunction of the right variant";
  const Concept& disjunct = id.rule == Rule::kOr1R ? l->c.left() : l->c.right();
  if (prem.succedent != Wrap(l->nominal, disjunct))
    return std::string("premise succedent is not the ") + (id.rule == Rule::kOr1R ? "left" : "right") + " disjunct";
  if (prem.antecedent != c.antecedent) return "antecedents differ";
  return std::nullopt;
}

Error CheckOrL(RuleId id, const Sequent& a, const Sequent& b, const Sequent& c, const RuleParams& p) {
  if (a.succedent != c.succedent || b.succedent != c.succedent) return "succedent changed";
  for (const auto& f : c.antecedent) {
    auto l = Unwrap(f, id.nominal);
    if (!l || !l->c.is(Concept::Kind::kOr) || !Matches(p.principal, f)) continue;
    if (Frame(c.antecedent, {f}, a.antecedent, {Wrap(l->nominal, l->c.left())}) &&
        Frame(c.antecedent, {f}, b.antecedent, {Wrap(l->nominal, l->c.right())}))
      return std::nullopt;
  }
  return NoInstance(id);
}

Error CheckPromoteExists(const RuleParams& p, const Sequent& prem, const Sequent& c) {
  if (!c.succedent.is_concept() || !c.succedent.as_concept().is(Concept::Kind::kExists))
    return "succedent is not some R.beta";
  const Concept& goal = c.succedent.as_concept();
  const std::string& role = goal.name();
  if (!Matches(p.role, role)) return "role differs from params";
  if (prem.succedent != Formula(goal.body())) return "premise succedent is not beta";
  for (const auto& f : c.antecedent) {
    if (!f.is_concept() || !f.as_concept().is(Concept::Kind::kExists) || f.as_concept().name() != role ||
        !Matches(p.principal, f))
      continue;
    const Formula alpha(f.as_concept().body());
    if (!Contains(prem.antecedent, alpha)) continue;
    for (const FormulaSet& delta : {Minus(prem.antecedent, {alpha}), prem.antecedent}) {
      if (Plus(Promote(delta, role), {f}) == c.antecedent) return std::nullopt;
    }
  }
  return NoInstance({Rule::kPromoteExists});
}

Error CheckPromoteForall(const RuleParams& p, const Sequent& prem, const Sequent& c) {
  if (!c.succedent.is_concept() || !c.succedent.as_concept().is(Concept::Kind::kForall))
    return "succedent is not all R.alpha";
  const Concept& goal = c.succedent.as_concept();
  if (!Matches(p.role, goal.name())) return "role differs from params";
  if (prem.succedent != Formula(goal.body())) return "premise succedent is not alpha";
  if (Promote(prem.antecedent, goal.name()) != c.antecedent) return "antecedent is not all R. applied to the premise";
  return std::nullopt;
}

Error CheckPromoteNominal(const RuleParams& p, const Sequent& prem, const Sequent& c) {
  std::set<std::string> candidates;
  if (p.prefix) {
    candidates.insert(*p.prefix);
  } else {
    if (auto x = OuterNominal(c.succedent)) candidates.insert(*x);
    for (const auto& f : c.antecedent)
      if (auto x = OuterNominal(f)) candidates.insert(*x);
  }
  for (const auto& x : candidates) {
    const Formula succ = prem.succedent.is_concept() ? Formula::At(x, prem.succedent.as_concept()) : prem.succedent;
    if (succ == c.succedent && Prefix(prem.antecedent, x) == c.antecedent) return std::nullopt;
  }
  return NoInstance({Rule::kPromoteNominal});
}

Error CheckCut(const RuleParams& p, const Sequent& lemma, const Sequent& use, const Sequent& c) {
  if (!Matches(p.principal, lemma.succedent)) return "cut formula differs from params";
  if (lemma.antecedent != c.antecedent) return "first premise antecedent differs from the conclusion";
  if (use.succedent != c.succedent) return "second premise succedent differs from the conclusion";
  if (use.antecedent != Plus(c.antecedent, {lemma.succedent}))
    return "second premise antecedent is not the conclusion antecedent plus the cut formula";
  return std::nullopt;
}

Error CheckWeaken(const Sequent& prem, const Sequent& c) {
  if (prem.succedent != c.succedent) return "succedent changed";
  if (!SubsetOf(prem.antecedent, c.antecedent)) return "premise antecedent is not a subset of the conclusion";
  return std::nullopt;
}

void CheckTree(const ProofTree& t, std::vector<std::size_t>& path, std::optional<ProofRejected>& out) {
  if (out) return;
  std::vector<Sequent> premises;
  premises.reserve(t.premises.size());
  for (const auto& child : t.premises) premises.push_back(child.conclusion);
  if (auto err = StepError(t.rule, t.params, premises, t.conclusion)) {
    out = ProofRejected{path, ToString(t.rule) + ": " + *err};
    return;
  }
  for (std::size_t i = 0; i < t.premises.size() && !out; ++i) {
    path.push_back(i);
    CheckTree(t.premises[i], path, out);
    path.pop_back();
  }
}

}  // namespace

bool NominalVariantAllowed(Rule rule) { return Info(rule).nominal_variant; }
std::size_t Arity(Rule rule) { return Info(rule).arity; }

std::string ToString(RuleId id) { return (id.nominal ? "n-" : "") + std::string(Info(id.rule).name); }

std::optional<RuleId> ParseRuleId(std::string_view text) {
  bool nominal = false;
  if (text.substr(0, 2) == "n-") {
    nominal = true;
    text.remove_prefix(2);
  }
  for (const auto& r : kRules) {
    if (text == r.name) {
      if (nominal && !r.nominal_variant) return std::nullopt;
      return RuleId{r.rule, nominal};
    }
  }
  return std::nullopt;
}

std::vector<RuleId> AllRuleIds() {
  std::vector<RuleId> out;
  for (const auto& r : kRules) {
    out.push_back({r.rule, false});
    if (r.nominal_variant) out.push_back({r.rule, true});
  }
  return out;
}

std::size_t ProofTree::height() const {
  std::size_t h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::optional<std::string> StepError(RuleId id, const RuleParams& p, std::span<const Sequent> premises,
                                     const Sequent& c) {
  if (id.nominal && !NominalVariantAllowed(id.rule)) return "rule has no nominal variant";
  if (premises.size() != Arity(id.rule))
    return "expected " + std::to_string(Arity(id.rule)) + " premise(s), got " + std::to_string(premises.size());
  switch (id.rule) {
    case Rule::kAxiom:
      return CheckAxiom(id, p, c);
    case Rule::kBotL:
      return CheckBotL(id, p, c);
    case Rule::kForallR:
      return CheckForallR(p, premises[0], c);
    case Rule::kForallL:
      return CheckForallL(p, premises[0], c);
    case Rule::kExistsR:
      return CheckExistsR(p, premises[0], premises[1], c);
    case Rule::kExistsL:
      return CheckExistsL(p, premises[0], c);
    case Rule::kSubR:
      return CheckSubR(id, premises[0], c, p);
    case Rule::kSubL:
      return CheckSubL(id, premises[0], premises[1], c, p);
    case Rule::kAndR:
      return CheckAndR(id, premises[0], premises[1], c, p);
    case Rule::kAndL:
      return CheckAndL(id, premises[0], c, p);
    case Rule::kOr1R:
    case Rule::kOr2R:
      return CheckOrR(id, premises[0], c, p);
    case Rule::kOrL:
      return CheckOrL(id, premises[0], premises[1], c, p);
    case Rule::kPromoteExists:
      return CheckPromoteExists(p, premises[0], c);
    case Rule::kPromoteForall:
      return CheckPromoteForall(p, premises[0], c);
    case Rule::kPromoteNominal:
      return CheckPromoteNominal(p, premises[0], c);
    case Rule::kCut:
      return CheckCut(p, premises[0], premises[1], c);
    case Rule::kWeaken:
      return CheckWeaken(premises[0], c);
  }
  return "unknown rule";
}

bool CheckStep(RuleId rule, const RuleParams& params, std::span<const Sequent> premises, const Sequent& conclusion) {
  return !StepError(rule, params, premises, conclusion);
}

ProofVerdict CheckProof(const ProofTree& tree) {
  std::vector<std::size_t> path;
  std::optional<ProofRejected> out;
  CheckTree(tree, path, out);
  if (out) return *out;
  return ProofAccepted{};
}

}  // namespace ialc
