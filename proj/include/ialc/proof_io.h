// Sequent proof files: a JSON tree of nodes
//
//   {"rule": "sub-r",
//    "conclusion": "|- A -> A",
//    "params": {"principal": "A -> A"},
//    "premises": [{"rule": "axiom", "conclusion": "A |- A", "premises": []}]}
//
// `params` keys: principal (formula), role, fresh (nominal), prefix
// (nominal). Sequents and formulas use the surface syntax.

#ifndef IALC_PROOF_IO_H_
#define IALC_PROOF_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "ialc/calculus.h"

namespace ialc {

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ProofFormatError (bad structure or rule name) or ParseError (bad
// sequent or formula text).
ProofTree ParseProofTree(std::string_view text);
std::string SerializeProofTree(const ProofTree& tree);

}  // namespace ialc

#endif  // IALC_PROOF_IO_H_
