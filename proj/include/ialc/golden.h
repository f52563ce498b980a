// The five derivations showing the calculus proves the role axioms, with
// alpha := A and beta := B. Named axiom1..axiom5 after the derivation
// labels (axiom1 is the some-R form, axiom2 the all-R form).

#ifndef IALC_GOLDEN_H_
#define IALC_GOLDEN_H_

#include <string>
#include <vector>

#include "ialc/calculus.h"

namespace ialc {

struct GoldenDerivation {
  std::string name;
  ProofTree tree;
};

std::vector<GoldenDerivation> GoldenDerivations();

}  // namespace ialc

#endif  // IALC_GOLDEN_H_
