// Abstract syntax for iALC concepts, formulas, and sequents.
//
// All values are immutable and share structure through reference-counted
// nodes, so copying a Concept or Formula is cheap.

#ifndef IALC_SYNTAX_H_
#define IALC_SYNTAX_H_

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ialc {

class Concept {
 public:
  enum class Kind { kAtom, kTop, kBot, kNot, kAnd, kOr, kSubs, kExists, kForall };

  static Concept Atom(std::string name);
  static Concept Top();
  static Concept Bot();
  static Concept Not(Concept c);
  static Concept And(Concept l, Concept r);
  static Concept Or(Concept l, Concept r);
  static Concept Subs(Concept l, Concept r);
  static Concept Exists(std::string role, Concept c);
  static Concept Forall(std::string role, Concept c);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // Atom name for kAtom, role name for kExists/kForall.
  const std::string& name() const;
  // Operand of kNot/kExists/kForall, left operand of binary nodes.
  const Concept& left() const;
  const Concept& body() const { return left(); }
  const Concept& right() const;

  std::size_t depth() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// A sequent member: a concept, a nominal assertion x:F (F a concept or a
// further nominal assertion), or a role assertion R(x,y).
class Formula {
 public:
  enum class Kind { kConcept, kNominal, kRole };

  Formula(Concept c);  // NOLINT: concepts are formulas
  static Formula At(std::string nominal, Formula body);
  static Formula At(std::string nominal, Concept body) { return At(std::move(nominal), Formula(std::move(body))); }
  static Formula Role(std::string subject, std::string role, std::string object);

  Kind kind() const { return kind_; }
  bool is_concept() const { return kind_ == Kind::kConcept; }
  bool is_nominal() const { return kind_ == Kind::kNominal; }
  bool is_role() const { return kind_ == Kind::kRole; }

  // kConcept only.
  const Concept& as_concept() const { return *concept_; }
  // kNominal: the asserting nominal. kRole: the subject.
  const std::string& nominal() const { return names_[0]; }
  // kNominal only.
  const Formula& body() const { return *body_; }
  // kRole only.
  const std::string& role() const { return names_[1]; }
  const std::string& object() const { return names_[2]; }

  // x:C with C a concept.
  bool is_labelled_concept() const { return is_nominal() && body().is_concept(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  Formula() = default;
  Kind kind_ = Kind::kConcept;
  std::optional<Concept> concept_;
  std::shared_ptr<const Formula> body_;
  std::vector<std::string> names_;
};

using FormulaSet = std::set<Formula>;

struct Sequent {
  FormulaSet antecedent;
  Formula succedent;

  Sequent(FormulaSet ante, Formula succ) : antecedent(std::move(ante)), succedent(std::move(succ)) {}

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
    if (auto c = a.antecedent <=> b.antecedent; c != 0) return c;
    return a.succedent <=> b.succedent;
  }
};

// Theta, Gamma |= delta.
struct Problem {
  std::vector<Formula> theory;
  std::vector<Formula> assumptions;
  Formula goal;

  // theory and assumptions become the antecedent.
  Sequent AsSequent() const;
};

// Outer nominal of a nominal assertion; none for concepts and role assertions.
std::optional<std::string> OuterNominal(const Formula& f);

// Every nominal occurring anywhere in f (nested bodies and role assertions
// included).
void CollectNominals(const Formula& f, std::set<std::string>& out);
std::set<std::string> Nominals(const Sequent& s);

struct Symbols {
  std::set<std::string> atoms;
  std::set<std::string> roles;
  std::set<std::string> nominals;
};
void CollectSymbols(const Concept& c, Symbols& out);
void CollectSymbols(const Formula& f, Symbols& out);
Symbols CollectSymbols(const Sequent& s);

std::string Render(const Concept& c);
std::string Render(const Formula& f);
std::string Render(const Sequent& s);

}  // namespace ialc

#endif  // IALC_SYNTAX_H_
