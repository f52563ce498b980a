// Bounded backward proof search and countermodel search.

#ifndef IALC_PROVER_H_
#define IALC_PROVER_H_

#include <cstddef>
#include <optional>
#include <variant>

#include "ialc/calculus.h"
#include "ialc/modelgen.h"
#include "ialc/semantics.h"

namespace ialc {

struct Budget {
  int max_depth = 24;  // rule applications along a branch; weaken nodes are free
  std::size_t max_visited = 100000;
};

struct Proved {
  ProofTree tree;
};
struct Unknown {
  std::size_t visited = 0;
  bool budget_exhausted = false;  // the visited cap, not the depth bound, stopped the search
};
using ProofResult = std::variant<Proved, Unknown>;

// Cut-free and deterministic. Nominals introduced by the engine are named
// _n0, _n1, ... (the smallest index unused in the current sequent).
ProofResult Prove(const Sequent& s, Budget budget = {});

// First enumerated model (over `sig` extended with the sequent's own
// symbols) falsifying `s`.
std::optional<Interpretation> FindCountermodel(const Sequent& s, const Signature& sig, SequentOptions options = {});

}  // namespace ialc

#endif  // IALC_PROVER_H_
