// Model files: a JSON document
//
//   {"worlds": ["w0", "w1"],
//    "leq": [["w0", "w1"]],
//    "roles": {"R": [["w0", "w1"]]},
//    "atoms": {"A": ["w1"]},
//    "nominals": {"x": "w0"}}
//
// World ids may be strings or integers. On load the refinement relation is
// closed reflexively and transitively and atoms are closed upward (with a
// warning); F1/F2 violations reject the file unless `raw` is set.

#ifndef IALC_MODEL_IO_H_
#define IALC_MODEL_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ialc/semantics.h"

namespace ialc {

class ModelFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedModel {
  Interpretation model;
  std::vector<std::string> warnings;
};

LoadedModel ParseModel(std::string_view text, bool raw = false);
std::string SerializeModel(const Interpretation& model);

// Reflexive-transitive closure in place.
void ClosePreorder(Relation& rel);

}  // namespace ialc

#endif  // IALC_MODEL_IO_H_
