#include "ialc/prover.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace ialc {

namespace {

Formula Wrap(const std::optional<std::string>& x, const Concept& c) {
  return x ? Formula::At(*x, c) : Formula(c);
}

// Concept of a pure or labelled concept formula, with its label.
std::optional<std::pair<std::optional<std::string>, Concept>> Split(const Formula& f) {
  if (f.is_concept()) return std::pair{std::optional<std::string>{}, f.as_concept()};
  if (f.is_labelled_concept()) return std::pair{std::optional<std::string>{f.nominal()}, f.body().as_concept()};
  return std::nullopt;
}

RuleId Id(Rule r, const std::optional<std::string>& x) { return RuleId{r, x.has_value()}; }

ProofTree Node(Sequent conclusion, RuleId rule, RuleParams params, std::vector<ProofTree> premises) {
  return ProofTree{std::move(conclusion), rule, std::move(params), std::move(premises)};
}

ProofTree Weaken(const Sequent& conclusion, ProofTree child) {
  if (child.conclusion == conclusion) return child;
  return Node(conclusion, {Rule::kWeaken}, {}, {std::move(child)});
}

std::string FreshNominal(const Sequent& s) {
  const std::set<std::string> used = Nominals(s);
  for (std::size_t k = 0;; ++k) {
    std::string name = "_n" + std::to_string(k);
    if (!used.count(name)) return name;
  }
}

FormulaSet With(FormulaSet s, std::initializer_list<Formula> extra) {
  s.insert(extra.begin(), extra.end());
  return s;
}

FormulaSet Without(FormulaSet s, const Formula& f) {
  s.erase(f);
  return s;
}

class Search {
 public:
  explicit Search(Budget budget) : budget_(budget) {}

  std::optional<ProofTree> Run(const Sequent& s) {
    for (int depth = 1; depth <= budget_.max_depth && !exhausted_; ++depth) {
      if (auto tree = Find(s, depth)) return tree;
    }
    return std::nullopt;
  }

  std::size_t visited() const { return visited_; }
  bool exhausted() const { return exhausted_; }

 private:
  std::optional<ProofTree> Find(const Sequent& s, int depth) {
    if (depth <= 0 || exhausted_) return std::nullopt;
    if (++visited_ > budget_.max_visited) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (auto leaf = Leaf(s)) return leaf;
    if (ancestors_.count(s)) return std::nullopt;
    auto known = failed_.find(s);
    if (known != failed_.end() && known->second >= depth) return std::nullopt;

    ancestors_.insert(s);
    std::optional<ProofTree> out = Expand(s, depth - 1);
    ancestors_.erase(s);
    if (!out && !exhausted_) {
      int& d = failed_[s];
      d = std::max(d, depth);
    }
    return out;
  }

  static std::optional<ProofTree> Leaf(const Sequent& s) {
    if (s.antecedent.count(s.succedent)) return Node(s, {Rule::kAxiom, s.succedent.is_nominal()}, {}, {});
    if (s.antecedent.count(Formula(Concept::Bot()))) return Node(s, {Rule::kBotL, false}, {}, {});
    for (const auto& f : s.antecedent)
      if (f.is_labelled_concept() && f.body().as_concept().is(Concept::Kind::kBot))
        return Node(s, {Rule::kBotL, true}, {f, std::nullopt, std::nullopt, std::nullopt}, {});
    return std::nullopt;
  }

  std::optional<ProofTree> Unary(const Sequent& s, RuleId rule, RuleParams params, const Sequent& premise, int d) {
    auto child = Find(premise, d);
    if (!child) return std::nullopt;
    return Node(s, rule, std::move(params), {std::move(*child)});
  }

  std::optional<ProofTree> Binary(const Sequent& s, RuleId rule, RuleParams params, const Sequent& a,
                                  const Sequent& b, int d) {
    auto left = Find(a, d);
    if (!left) return std::nullopt;
    auto right = Find(b, d);
    if (!right) return std::nullopt;
    return Node(s, rule, std::move(params), {std::move(*left), std::move(*right)});
  }

  // Invertible steps: the first one that applies decides the node.
  std::optional<std::optional<ProofTree>> Commit(const Sequent& s, int d) {
    const FormulaSet& ante = s.antecedent;
    for (const auto& f : ante) {
      auto split = Split(f);
      if (!split) continue;
      const auto& [x, c] = *split;
      RuleParams p{f, std::nullopt, std::nullopt, std::nullopt};
      if (c.is(Concept::Kind::kAnd)) {
        Sequent prem(With(Without(ante, f), {Wrap(x, c.left()), Wrap(x, c.right())}), s.succedent);
        return Unary(s, Id(Rule::kAndL, x), p, prem, d);
      }
      if (c.is(Concept::Kind::kOr)) {
        Sequent a(With(Without(ante, f), {Wrap(x, c.left())}), s.succedent);
        Sequent b(With(Without(ante, f), {Wrap(x, c.right())}), s.succedent);
        return Binary(s, Id(Rule::kOrL, x), p, a, b, d);
      }
    }
    if (auto split = Split(s.succedent)) {
      const auto& [x, c] = *split;
      RuleParams p{s.succedent, std::nullopt, std::nullopt, std::nullopt};
      if (c.is(Concept::Kind::kAnd)) {
        return Binary(s, Id(Rule::kAndR, x), p, Sequent(ante, Wrap(x, c.left())), Sequent(ante, Wrap(x, c.right())),
                      d);
      }
      if (c.is(Concept::Kind::kSubs)) {
        return Unary(s, Id(Rule::kSubR, x), p, Sequent(With(ante, {Wrap(x, c.left())}), Wrap(x, c.right())), d);
      }
    }
    for (const auto& f : ante) {
      if (!f.is_labelled_concept() || !f.body().as_concept().is(Concept::Kind::kExists)) continue;
      const Concept& c = f.body().as_concept();
      const std::string y = FreshNominal(s);
      Sequent prem(With(Without(ante, f), {Formula::Role(f.nominal(), c.name(), y), Formula::At(y, c.body())}),
                   s.succedent);
      return Unary(s, {Rule::kExistsL}, {f, c.name(), y, std::nullopt}, prem, d);
    }
    for (const auto& f : ante) {
      if (!f.is_labelled_concept() || !f.body().as_concept().is(Concept::Kind::kForall)) continue;
      const Concept& c = f.body().as_concept();
      for (const auto& r : ante) {
        if (!r.is_role() || r.nominal() != f.nominal() || r.role() != c.name()) continue;
        const Formula instance = Formula::At(r.object(), c.body());
        if (ante.count(instance)) continue;
        return Unary(s, {Rule::kForallL}, {f, c.name(), r.object(), std::nullopt},
                     Sequent(With(ante, {instance}), s.succedent), d);
      }
    }
    return std::nullopt;
  }

  std::optional<ProofTree> Expand(const Sequent& s, int d) {
    if (auto committed = Commit(s, d)) return std::move(*committed);
    const FormulaSet& ante = s.antecedent;
    const Formula& goal = s.succedent;

    if (goal.is_labelled_concept()) {
      const std::string& x = goal.nominal();
      const Concept& c = goal.body().as_concept();
      if (c.is(Concept::Kind::kForall)) {
        const std::string y = FreshNominal(s);
        Sequent prem(With(ante, {Formula::Role(x, c.name(), y)}), Formula::At(y, c.body()));
        if (auto t = Unary(s, {Rule::kForallR}, {goal, c.name(), y, std::nullopt}, prem, d)) return t;
      }
      if (c.is(Concept::Kind::kExists)) {
        for (const auto& r : ante) {
          if (!r.is_role() || r.nominal() != x || r.role() != c.name()) continue;
          if (auto t = Binary(s, {Rule::kExistsR}, {goal, c.name(), r.object(), std::nullopt}, Sequent(ante, r),
                              Sequent(ante, Formula::At(r.object(), c.body())), d))
            return t;
          if (exhausted_) return std::nullopt;
        }
      }
    }
    if (auto split = Split(goal)) {
      const auto& [x, c] = *split;
      if (c.is(Concept::Kind::kOr)) {
        RuleParams p{goal, std::nullopt, std::nullopt, std::nullopt};
        if (auto t = Unary(s, Id(Rule::kOr1R, x), p, Sequent(ante, Wrap(x, c.left())), d)) return t;
        if (auto t = Unary(s, Id(Rule::kOr2R, x), p, Sequent(ante, Wrap(x, c.right())), d)) return t;
      }
    }
    for (const auto& f : ante) {
      if (exhausted_) return std::nullopt;
      auto split = Split(f);
      if (!split || !split->second.is(Concept::Kind::kSubs)) continue;
      const auto& [x, c] = *split;
      const Formula beta = Wrap(x, c.right());
      if (ante.count(beta)) continue;
      Sequent left(ante, Wrap(x, c.left()));
      Sequent right(With(Without(ante, f), {beta}), goal);
      if (auto t = Binary(s, Id(Rule::kSubL, x), {f, std::nullopt, std::nullopt, std::nullopt}, left, right, d))
        return t;
    }
    if (goal.is_concept() && goal.as_concept().is(Concept::Kind::kForall)) {
      if (auto t = PromoteForall(s, d)) return t;
    }
    if (goal.is_concept() && goal.as_concept().is(Concept::Kind::kExists)) {
      if (auto t = PromoteExists(s, d)) return t;
    }
    if (goal.is_labelled_concept()) {
      if (auto t = PromoteNominal(s, d)) return t;
    }
    return std::nullopt;
  }

  // Antecedent members that survive an R-promotion, and their premise form.
  static void SplitForPromotion(const FormulaSet& ante, const std::string& role, FormulaSet& keep,
                                FormulaSet& premise) {
    for (const auto& f : ante) {
      if (!f.is_concept()) {
        keep.insert(f);
        premise.insert(f);
      } else if (f.as_concept().is(Concept::Kind::kForall) && f.as_concept().name() == role) {
        keep.insert(f);
        premise.insert(f.as_concept().body());
      }
    }
  }

  std::optional<ProofTree> PromoteForall(const Sequent& s, int d) {
    const Concept& c = s.succedent.as_concept();
    FormulaSet keep, premise;
    SplitForPromotion(s.antecedent, c.name(), keep, premise);
    Sequent kept(keep, s.succedent);
    auto t = Unary(kept, {Rule::kPromoteForall}, {std::nullopt, c.name(), std::nullopt, std::nullopt},
                   Sequent(premise, c.body()), d);
    if (!t) return std::nullopt;
    return Weaken(s, std::move(*t));
  }

  std::optional<ProofTree> PromoteExists(const Sequent& s, int d) {
    const Concept& c = s.succedent.as_concept();
    FormulaSet keep, premise;
    SplitForPromotion(s.antecedent, c.name(), keep, premise);
    for (const auto& f : s.antecedent) {
      if (exhausted_) return std::nullopt;
      if (!f.is_concept() || !f.as_concept().is(Concept::Kind::kExists) || f.as_concept().name() != c.name()) continue;
      Sequent kept(With(keep, {f}), s.succedent);
      auto t = Unary(kept, {Rule::kPromoteExists}, {f, c.name(), std::nullopt, std::nullopt},
                     Sequent(With(premise, {f.as_concept().body()}), c.body()), d);
      if (t) return Weaken(s, std::move(*t));
    }
    return std::nullopt;
  }

  std::optional<ProofTree> PromoteNominal(const Sequent& s, int d) {
    const std::string& x = s.succedent.nominal();
    FormulaSet keep, premise;
    for (const auto& f : s.antecedent) {
      if (f.is_concept()) continue;
      keep.insert(f);
      premise.insert(f.is_labelled_concept() && f.nominal() == x ? Formula(f.body().as_concept()) : f);
    }
    Sequent kept(keep, s.succedent);
    auto t = Unary(kept, {Rule::kPromoteNominal}, {std::nullopt, std::nullopt, std::nullopt, x},
                   Sequent(premise, s.succedent.body().as_concept()), d);
    if (!t) return std::nullopt;
    return Weaken(s, std::move(*t));
  }

  Budget budget_;
  std::size_t visited_ = 0;
  bool exhausted_ = false;
  std::set<Sequent> ancestors_;
  std::map<Sequent, int> failed_;
};

}  // namespace

ProofResult Prove(const Sequent& s, Budget budget) {
  Search search(budget);
  if (auto tree = search.Run(s)) return Proved{std::move(*tree)};
  return Unknown{search.visited(), search.exhausted()};
}

std::optional<Interpretation> FindCountermodel(const Sequent& s, const Signature& sig, SequentOptions options) {
  Signature full = sig;
  const Signature own = SignatureOf(s, sig.max_worlds);
  auto merge = [](std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& name : from)
      if (std::find(into.begin(), into.end(), name) == into.end()) into.push_back(name);
  };
  merge(full.atoms, own.atoms);
  merge(full.roles, own.roles);
  merge(full.nominals, own.nominals);
  ModelEnumerator models(full);
  while (auto m = models.Next()) {
    if (!SequentValid(*m, s, options)) return m;
  }
  return std::nullopt;
}

}  // namespace ialc
