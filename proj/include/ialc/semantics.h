// Finite constructive interpretations and the satisfaction relations over
// them.

#ifndef IALC_SEMANTICS_H_
#define IALC_SEMANTICS_H_

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ialc/syntax.h"

namespace ialc {

using World = int;

inline constexpr int kMaxWorlds = 64;

// A set of worlds of one interpretation, as a 64-bit mask.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet Single(World w) { return WorldSet(std::uint64_t{1} << w); }
  static constexpr WorldSet FirstN(int n) {
    return WorldSet(n >= kMaxWorlds ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(World w) const { return (bits_ >> w) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr void insert(World w) { bits_ |= std::uint64_t{1} << w; }
  constexpr void erase(World w) { bits_ &= ~(std::uint64_t{1} << w); }
  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet& operator|=(WorldSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const WorldSet&) const = default;

  std::vector<World> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<World>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

// Binary relation on the worlds of one interpretation, stored as successor
// sets.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int size) : succ_(static_cast<std::size_t>(size)) {}

  int size() const { return static_cast<int>(succ_.size()); }
  bool contains(World a, World b) const { return succ_[a].contains(b); }
  void insert(World a, World b) { succ_[a].insert(b); }
  void erase(World a, World b) { succ_[a].erase(b); }
  WorldSet successors(World a) const { return succ_[a]; }
  bool empty() const;
  std::vector<std::pair<World, World>> pairs() const;

  bool operator==(const Relation&) const = default;

 private:
  std::vector<WorldSet> succ_;
};

struct Interpretation {
  // A discrete model: `n` worlds, identity refinement, nothing else.
  Interpretation() : Interpretation(1) {}
  explicit Interpretation(int n);

  int size;             // worlds are 0 .. size-1
  Relation refinement;  // w ⪯ v, as w -> v
  std::map<std::string, Relation> roles;
  std::map<std::string, WorldSet> atoms;
  std::map<std::string, World> nominals;
  std::vector<std::string> world_names;  // optional display names

  WorldSet all() const { return WorldSet::FirstN(size); }
  // Worlds v with w ⪯ v.
  WorldSet up(World w) const { return refinement.successors(w); }
  const Relation& role(const std::string& name) const;
  WorldSet atom(const std::string& name) const;
  std::string world_name(World w) const;

  bool operator==(const Interpretation& o) const {
    return size == o.size && refinement == o.refinement && roles == o.roles && atoms == o.atoms &&
           nominals == o.nominals;
  }
};

struct Violation {
  enum class Kind { kReflexivity, kTransitivity, kHeredity, kF1, kF2, kDanglingNominal };
  Kind kind;
  std::vector<World> witnesses;
  std::string name;  // atom, role, or nominal involved, if any

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

const char* ToString(Violation::Kind kind);
std::string Describe(const Violation& v, const Interpretation& model);

// Every violation of the preorder, heredity, F1/F2, and nominal-range
// conditions, with witnesses.
ValidationReport Validate(const Interpretation& model);

class UnassignedNominal : public std::runtime_error {
 public:
  explicit UnassignedNominal(const std::string& nominal)
      : std::runtime_error("nominal '" + nominal + "' has no assigned world"), nominal_(nominal) {}
  const std::string& nominal() const { return nominal_; }

 private:
  std::string nominal_;
};

// Missing atoms and roles evaluate to the empty set and empty relation.
WorldSet Extension(const Interpretation& model, const Concept& c);

// I |= f. Concepts are read globally (extension is every world); x:C holds
// when every refinement of x's world is in C; R(x,y) holds when every
// refinement of x's world is R-related to every refinement of y's world.
bool Satisfies(const Interpretation& model, const Formula& f);

struct SequentOptions {
  // Read top-level subsumptions of the antecedent at every world.
  bool tbox_global = true;
};

bool SequentValid(const Interpretation& model, const Sequent& s, SequentOptions options = {});

// Countermodel search over a stream; the stream returns nullopt when done.
using ModelSource = std::function<std::optional<Interpretation>()>;

struct Valid {};
struct Counterexample {
  Interpretation model;
  std::size_t index;  // position in the stream, 0-based
};
using Entailment = std::variant<Valid, Counterexample>;

Entailment Entails(const ModelSource& models, const Sequent& s, SequentOptions options = {});
Entailment Entails(std::span<const Interpretation> models, const Sequent& s, SequentOptions options = {});

}  // namespace ialc

#endif  // IALC_SEMANTICS_H_
