// The sequent calculus as data: rule identifiers, proof trees, and a
// node-by-node checker.

#ifndef IALC_CALCULUS_H_
#define IALC_CALCULUS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ialc/syntax.h"

namespace ialc {

enum class Rule {
  kAxiom,
  kBotL,
  kForallR,
  kForallL,
  kExistsR,
  kExistsL,
  kSubR,
  kSubL,
  kAndR,
  kAndL,
  kOr1R,
  kOr2R,
  kOrL,
  kPromoteExists,
  kPromoteForall,
  kPromoteNominal,
  kCut,
  kWeaken,
};

// A rule plus its nominal-variant flag. The nominal variant of a
// propositional rule works on x:alpha instead of alpha for one shared x; for
// the axioms it marks a nominal-assertion succedent (axiom) or x:bot (bot-l).
struct RuleId {
  Rule rule;
  bool nominal = false;

  bool operator==(const RuleId&) const = default;
};

bool NominalVariantAllowed(Rule rule);
std::size_t Arity(Rule rule);

// "sub-r", "n-sub-r", "p-exists", ...
std::string ToString(RuleId id);
std::optional<RuleId> ParseRuleId(std::string_view text);
std::vector<RuleId> AllRuleIds();

// Optional hints; when absent the checker searches the conclusion for a
// matching instance.
struct RuleParams {
  std::optional<Formula> principal;  // the cut formula for cut
  std::optional<std::string> role;
  std::optional<std::string> fresh;   // y of forall-r / exists-l / exists-r
  std::optional<std::string> prefix;  // x of p-nom

  bool operator==(const RuleParams&) const = default;
};

struct ProofTree {
  Sequent conclusion;
  RuleId rule;
  RuleParams params;
  std::vector<ProofTree> premises;

  std::size_t height() const;
  std::size_t size() const;
  bool operator==(const ProofTree&) const = default;
};

// Reason the step is wrong, or nullopt if it instantiates the rule.
std::optional<std::string> StepError(RuleId rule, const RuleParams& params, std::span<const Sequent> premises,
                                     const Sequent& conclusion);

bool CheckStep(RuleId rule, const RuleParams& params, std::span<const Sequent> premises, const Sequent& conclusion);

struct ProofAccepted {};
struct ProofRejected {
  std::vector<std::size_t> path;  // premise indices from the root
  std::string reason;
};
using ProofVerdict = std::variant<ProofAccepted, ProofRejected>;

// Pre-order; reports the first node that fails.
ProofVerdict CheckProof(const ProofTree& tree);

}  // namespace ialc

#endif  // IALC_CALCULUS_H_
