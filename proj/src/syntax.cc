#include "ialc/syntax.h"

#include <stdexcept>

namespace ialc {

struct Concept::Node {
  Kind kind;
  std::string name;
  std::optional<Concept> left;
  std::optional<Concept> right;
  std::size_t depth;
};

namespace {

void RequireName(const std::string& name, const char* what) {
  if (name.empty()) throw std::invalid_argument(std::string("empty ") + what + " name");
}

}  // namespace

Concept Concept::Atom(std::string name) {
  RequireName(name, "atom");
  return Concept(std::make_shared<const Node>(Node{Kind::kAtom, std::move(name), {}, {}, 0}));
}

Concept Concept::Top() {
  static const Concept top(std::make_shared<const Node>(Node{Kind::kTop, {}, {}, {}, 0}));
  return top;
}

Concept Concept::Bot() {
  static const Concept bot(std::make_shared<const Node>(Node{Kind::kBot, {}, {}, {}, 0}));
  return bot;
}

Concept Concept::Not(Concept c) {
  const std::size_t d = c.depth() + 1;
  return Concept(std::make_shared<const Node>(Node{Kind::kNot, {}, std::move(c), {}, d}));
}

#define IALC_BINARY(NAME, KIND)                                                               \
  Concept Concept::NAME(Concept l, Concept r) {                                               \
    const std::size_t d = std::max(l.depth(), r.depth()) + 1;                                 \
    return Concept(std::make_shared<const Node>(Node{KIND, {}, std::move(l), std::move(r), d})); \
  }
IALC_BINARY(And, Kind::kAnd)
IALC_BINARY(Or, Kind::kOr)
IALC_BINARY(Subs, Kind::kSubs)
#undef IALC_BINARY

Concept Concept::Exists(std::string role, Concept c) {
  RequireName(role, "role");
  const std::size_t d = c.depth() + 1;
  return Concept(std::make_shared<const Node>(Node{Kind::kExists, std::move(role), std::move(c), {}, d}));
}

Concept Concept::Forall(std::string role, Concept c) {
  RequireName(role, "role");
  const std::size_t d = c.depth() + 1;
  return Concept(std::make_shared<const Node>(Node{Kind::kForall, std::move(role), std::move(c), {}, d}));
}

Concept::Kind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Concept& Concept::left() const { return *node_->left; }
const Concept& Concept::right() const { return *node_->right; }
std::size_t Concept::depth() const { return node_->depth; }

bool operator==(const Concept& a, const Concept& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (a.node_->left) {
    if (auto c = a.left() <=> b.left(); c != 0) return c;
  }
  if (a.node_->right) return a.right() <=> b.right();
  return std::strong_ordering::equal;
}

Formula::Formula(Concept c) : kind_(Kind::kConcept), concept_(std::move(c)) {}

Formula Formula::At(std::string nominal, Formula body) {
  RequireName(nominal, "nominal");
  if (body.is_role()) throw std::invalid_argument("role assertion cannot be the body of a nominal assertion");
  Formula f;
  f.kind_ = Kind::kNominal;
  f.names_ = {std::move(nominal)};
  f.body_ = std::make_shared<const Formula>(std::move(body));
  return f;
}

Formula Formula::Role(std::string subject, std::string role, std::string object) {
  RequireName(subject, "nominal");
  RequireName(role, "role");
  RequireName(object, "nominal");
  Formula f;
  f.kind_ = Kind::kRole;
  f.names_ = {std::move(subject), std::move(role), std::move(object)};
  return f;
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case Formula::Kind::kConcept:
      return a.as_concept() <=> b.as_concept();
    case Formula::Kind::kNominal:
      if (auto c = a.nominal() <=> b.nominal(); c != 0) return c;
      return a.body() <=> b.body();
    case Formula::Kind::kRole:
      return a.names_ <=> b.names_;
  }
  return std::strong_ordering::equal;
}

Sequent Problem::AsSequent() const {
  FormulaSet ante(theory.begin(), theory.end());
  ante.insert(assumptions.begin(), assumptions.end());
  return Sequent(std::move(ante), goal);
}

std::optional<std::string> OuterNominal(const Formula& f) {
  if (f.is_nominal()) return f.nominal();
  return std::nullopt;
}

void CollectNominals(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kConcept:
      return;
    case Formula::Kind::kNominal:
      out.insert(f.nominal());
      CollectNominals(f.body(), out);
      return;
    case Formula::Kind::kRole:
      out.insert(f.nominal());
      out.insert(f.object());
      return;
  }
}

std::set<std::string> Nominals(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.antecedent) CollectNominals(f, out);
  CollectNominals(s.succedent, out);
  return out;
}

void CollectSymbols(const Concept& c, Symbols& out) {
  switch (c.kind()) {
    case Concept::Kind::kAtom:
      out.atoms.insert(c.name());
      return;
    case Concept::Kind::kTop:
    case Concept::Kind::kBot:
      return;
    case Concept::Kind::kNot:
      CollectSymbols(c.body(), out);
      return;
    case Concept::Kind::kAnd:
    case Concept::Kind::kOr:
    case Concept::Kind::kSubs:
      CollectSymbols(c.left(), out);
      CollectSymbols(c.right(), out);
      return;
    case Concept::Kind::kExists:
    case Concept::Kind::kForall:
      out.roles.insert(c.name());
      CollectSymbols(c.body(), out);
      return;
  }
}

void CollectSymbols(const Formula& f, Symbols& out) {
  switch (f.kind()) {
    case Formula::Kind::kConcept:
      CollectSymbols(f.as_concept(), out);
      return;
    case Formula::Kind::kNominal:
      out.nominals.insert(f.nominal());
      CollectSymbols(f.body(), out);
      return;
    case Formula::Kind::kRole:
      out.nominals.insert(f.nominal());
      out.nominals.insert(f.object());
      out.roles.insert(f.role());
      return;
  }
}

Symbols CollectSymbols(const Sequent& s) {
  Symbols out;
  for (const auto& f : s.antecedent) CollectSymbols(f, out);
  CollectSymbols(s.succedent, out);
  return out;
}

// Precedence levels, loosest first: -> (1), | (2), & (3), prefix operators (4).
namespace {

int Level(Concept::Kind k) {
  switch (k) {
    case Concept::Kind::kSubs:
      return 1;
    case Concept::Kind::kOr:
      return 2;
    case Concept::Kind::kAnd:
      return 3;
    case Concept::Kind::kNot:
    case Concept::Kind::kExists:
    case Concept::Kind::kForall:
      return 4;
    default:
      return 5;
  }
}

void RenderConcept(const Concept& c, int context, std::string& out) {
  const bool wrap = Level(c.kind()) < context;
  if (wrap) out += '(';
  switch (c.kind()) {
    case Concept::Kind::kAtom:
      out += c.name();
      break;
    case Concept::Kind::kTop:
      out += "top";
      break;
    case Concept::Kind::kBot:
      out += "bot";
      break;
    case Concept::Kind::kNot:
      out += "not ";
      RenderConcept(c.body(), 4, out);
      break;
    case Concept::Kind::kExists:
    case Concept::Kind::kForall:
      out += c.is(Concept::Kind::kExists) ? "some " : "all ";
      out += c.name();
      out += '.';
      RenderConcept(c.body(), 4, out);
      break;
    case Concept::Kind::kSubs:
      RenderConcept(c.left(), 2, out);
      out += " -> ";
      RenderConcept(c.right(), 1, out);
      break;
    case Concept::Kind::kOr:
      RenderConcept(c.left(), 2, out);
      out += " | ";
      RenderConcept(c.right(), 3, out);
      break;
    case Concept::Kind::kAnd:
      RenderConcept(c.left(), 3, out);
      out += " & ";
      RenderConcept(c.right(), 4, out);
      break;
  }
  if (wrap) out += ')';
}

void RenderFormula(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kConcept:
      RenderConcept(f.as_concept(), 1, out);
      return;
    case Formula::Kind::kNominal:
      out += f.nominal();
      out += " : ";
      if (f.body().is_nominal()) {
        out += '(';
        RenderFormula(f.body(), out);
        out += ')';
      } else {
        RenderFormula(f.body(), out);
      }
      return;
    case Formula::Kind::kRole:
      out += f.role() + "(" + f.nominal() + "," + f.object() + ")";
      return;
  }
}

}  // namespace

std::string Render(const Concept& c) {
  std::string out;
  RenderConcept(c, 1, out);
  return out;
}

std::string Render(const Formula& f) {
  std::string out;
  RenderFormula(f, out);
  return out;
}

std::string Render(const Sequent& s) {
  std::string out;
  for (const auto& f : s.antecedent) {
    if (!out.empty()) out += "; ";
    RenderFormula(f, out);
  }
  out += out.empty() ? "|- " : " |- ";
  RenderFormula(s.succedent, out);
  return out;
}

}  // namespace ialc
