// Exhaustive and random generation of validated interpretations.

#ifndef IALC_MODELGEN_H_
#define IALC_MODELGEN_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ialc/semantics.h"

namespace ialc {

struct Signature {
  std::vector<std::string> atoms;
  std::vector<std::string> roles;
  std::vector<std::string> nominals;
  int max_worlds = 1;

  // Throws std::invalid_argument on duplicate names or a bad world bound.
  void Check() const;
};

// Signature covering every symbol of a sequent.
Signature SignatureOf(const Sequent& s, int max_worlds);

// Streams every interpretation over 1..max_worlds worlds in lexicographic
// order of (world count, preorder mask, role masks, atom masks, nominal
// assignment). Roles violating F1/F2 and non-hereditary atom sets are
// skipped. Enumeration beyond 4 worlds is refused.
class ModelEnumerator {
 public:
  static constexpr int kMaxEnumerableWorlds = 4;

  explicit ModelEnumerator(Signature sig);

  std::optional<Interpretation> Next();
  ModelSource AsSource();

 private:
  bool StartWorldCount(int n);
  bool AdvancePreorder();
  void ResetBelowPreorder();
  bool Advance();
  Interpretation Build() const;

  Signature sig_;
  int n_ = 0;
  bool done_ = false;
  bool started_ = false;
  // Candidates for the current world count.
  std::vector<std::uint32_t> preorders_;
  std::size_t preorder_ = 0;
  std::vector<std::uint32_t> role_candidates_;  // F1/F2-compatible with the preorder
  std::vector<WorldSet> atom_candidates_;       // up-closed sets
  std::vector<std::size_t> role_idx_;
  std::vector<std::size_t> atom_idx_;
  std::vector<int> nominal_idx_;
};

// All reflexive-transitive relations on n worlds as n*n bitmasks (bit i*n+j
// means i ⪯ j), in increasing mask order.
std::vector<std::uint32_t> Preorders(int n);

std::map<std::string, WorldSet> HeredityClosure(const std::map<std::string, WorldSet>& valuation,
                                                const Relation& refinement);

class RetryBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic per (sig, seed). Uses exactly sig.max_worlds worlds.
Interpretation RandomModel(const Signature& sig, std::uint64_t seed, int retry_budget = 10000);

}  // namespace ialc

#endif  // IALC_MODELGEN_H_
