// Hilbert-style proofs: IPL base schemata, the five role axioms, modus
// ponens, and necessitation.
//
// Proof file format, one step per line (`#` comments):
//
//   A -> (B -> A) ; ipl a1 [C:=A, D:=B]
//   some R.bot -> bot ; ik 4 [R:=R]
//   B ; mp 1 2
//   all R.B ; nec 3 R
//
// Steps are numbered from 1 in file order.

#ifndef IALC_HILBERT_H_
#define IALC_HILBERT_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ialc/syntax.h"

namespace ialc::hilbert {

// Bindings for the schema metavariables C, D, E (concepts) and R (role).
struct Substitution {
  std::map<std::string, Concept> concepts;
  std::optional<std::string> role;
};

class MissingBinding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// IPL schemata a1..a9, plus a10: not C -> (C -> bot) and a11: (C -> bot) -> not C.
inline constexpr int kIplSchemaCount = 11;
Concept IplInstance(int id, const Substitution& subst);

// 1: all R.(C -> D) -> (all R.C -> all R.D)
// 2: all R.(C -> D) -> (some R.C -> some R.D)
// 3: some R.(C | D) -> (some R.C | some R.D)
// 4: some R.bot -> bot
// 5: (some R.C -> all R.D) -> all R.(C -> D)
inline constexpr int kRoleAxiomCount = 5;
Concept AxiomInstance(int id, const Substitution& subst);

struct IplStep {
  int schema;
  Substitution subst;
};
struct AxiomStep {
  int axiom;
  Substitution subst;
};
struct ModusPonens {
  int premise;      // line holding C
  int implication;  // line holding C -> D
};
struct Necessitation {
  int premise;
  std::string role;
};
using Justification = std::variant<IplStep, AxiomStep, ModusPonens, Necessitation>;

struct Line {
  Concept statement;
  Justification why;
};

using Proof = std::vector<Line>;

struct Accepted {};
struct Rejected {
  int line;  // 1-based
  std::string reason;
};
using Verdict = std::variant<Accepted, Rejected>;

Verdict Check(const Proof& proof);

Proof ParseProof(std::string_view text);
std::string RenderProof(const Proof& proof);

// The five-step derivation of C -> C from a1 and a2.
Proof IdentityProof(const Concept& c);

}  // namespace ialc::hilbert

#endif  // IALC_HILBERT_H_
