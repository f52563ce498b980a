#include "ialc/semantics.h"

#include <sstream>

namespace ialc {

std::vector<World> WorldSet::members() const {
  std::vector<World> out;
  for_each([&](World w) { out.push_back(w); });
  return out;
}

bool Relation::empty() const {
  for (const auto& s : succ_)
    if (!s.empty()) return false;
  return true;
}

std::vector<std::pair<World, World>> Relation::pairs() const {
  std::vector<std::pair<World, World>> out;
  for (World a = 0; a < size(); ++a) succ_[a].for_each([&](World b) { out.emplace_back(a, b); });
  return out;
}

Interpretation::Interpretation(int n) : size(n), refinement(n) {
  if (n < 1 || n > kMaxWorlds) throw std::invalid_argument("world count must be in 1.." + std::to_string(kMaxWorlds));
  for (World w = 0; w < n; ++w) refinement.insert(w, w);
}

const Relation& Interpretation::role(const std::string& name) const {
  static const Relation kEmpty(kMaxWorlds);
  auto it = roles.find(name);
  return it == roles.end() ? kEmpty : it->second;
}

WorldSet Interpretation::atom(const std::string& name) const {
  auto it = atoms.find(name);
  return it == atoms.end() ? WorldSet() : it->second;
}

std::string Interpretation::world_name(World w) const {
  if (w >= 0 && static_cast<std::size_t>(w) < world_names.size()) return world_names[w];
  return "w" + std::to_string(w);
}

const char* ToString(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kReflexivity:
      return "reflexivity";
    case Violation::Kind::kTransitivity:
      return "transitivity";
    case Violation::Kind::kHeredity:
      return "heredity";
    case Violation::Kind::kF1:
      return "F1";
    case Violation::Kind::kF2:
      return "F2";
    case Violation::Kind::kDanglingNominal:
      return "dangling-nominal";
  }
  return "?";
}

std::string Describe(const Violation& v, const Interpretation& model) {
  std::ostringstream os;
  os << ToString(v.kind);
  if (!v.name.empty()) os << " [" << v.name << "]";
  if (!v.witnesses.empty()) {
    os << " at";
    for (World w : v.witnesses) {
      if (w >= 0 && w < model.size) os << ' ' << model.world_name(w);
      else os << ' ' << w;
    }
  }
  return os.str();
}

ValidationReport Validate(const Interpretation& model) {
  ValidationReport report;
  auto add = [&](Violation::Kind k, std::vector<World> ws, std::string name = {}) {
    report.violations.push_back({k, std::move(ws), std::move(name)});
  };
  const int n = model.size;
  const Relation& leq = model.refinement;

  for (World w = 0; w < n; ++w)
    if (!leq.contains(w, w)) add(Violation::Kind::kReflexivity, {w});
  for (World a = 0; a < n; ++a)
    for (World b = 0; b < n; ++b) {
      if (!leq.contains(a, b)) continue;
      for (World c = 0; c < n; ++c)
        if (leq.contains(b, c) && !leq.contains(a, c)) add(Violation::Kind::kTransitivity, {a, b, c});
    }

  for (const auto& [name, ext] : model.atoms)
    ext.for_each([&](World w) {
      if (w >= n) return;
      model.up(w).for_each([&](World v) {
        if (!ext.contains(v)) add(Violation::Kind::kHeredity, {w, v}, name);
      });
    });

  for (const auto& [name, rel] : model.roles) {
    // F1: w ⪯ w', wRv  =>  some v' with w'Rv' and v ⪯ v'.
    for (World w = 0; w < n; ++w)
      rel.successors(w).for_each([&](World v) {
        model.up(w).for_each([&](World w2) {
          if (!rel.successors(w2).intersects(model.up(v))) add(Violation::Kind::kF1, {w, w2, v}, name);
        });
      });
    // F2: v ⪯ v', wRv  =>  some w' with w'Rv' and w ⪯ w'.
    for (World w = 0; w < n; ++w)
      rel.successors(w).for_each([&](World v) {
        model.up(v).for_each([&](World v2) {
          bool found = false;
          model.up(w).for_each([&](World w2) { found = found || rel.contains(w2, v2); });
          if (!found) add(Violation::Kind::kF2, {w, v, v2}, name);
        });
      });
  }

  for (const auto& [name, w] : model.nominals)
    if (w < 0 || w >= n) add(Violation::Kind::kDanglingNominal, {w}, name);
  return report;
}

namespace {

World NominalWorld(const Interpretation& model, const std::string& nominal) {
  auto it = model.nominals.find(nominal);
  if (it == model.nominals.end() || it->second < 0 || it->second >= model.size) throw UnassignedNominal(nominal);
  return it->second;
}

WorldSet Successors(const Interpretation& model, const std::string& role, World w) {
  auto it = model.roles.find(role);
  return it == model.roles.end() ? WorldSet() : it->second.successors(w);
}

}  // namespace

WorldSet Extension(const Interpretation& model, const Concept& c) {
  const WorldSet all = model.all();
  WorldSet out;
  switch (c.kind()) {
    case Concept::Kind::kAtom:
      return model.atom(c.name()) & all;
    case Concept::Kind::kTop:
      return all;
    case Concept::Kind::kBot:
      return {};
    case Concept::Kind::kAnd:
      return Extension(model, c.left()) & Extension(model, c.right());
    case Concept::Kind::kOr:
      return Extension(model, c.left()) | Extension(model, c.right());
    case Concept::Kind::kNot: {
      const WorldSet body = Extension(model, c.body());
      for (World x = 0; x < model.size; ++x)
        if (!model.up(x).intersects(body)) out.insert(x);
      return out;
    }
    case Concept::Kind::kSubs: {
      const WorldSet l = Extension(model, c.left());
      const WorldSet r = Extension(model, c.right());
      for (World x = 0; x < model.size; ++x)
        if ((model.up(x) & l).subset_of(r)) out.insert(x);
      return out;
    }
    case Concept::Kind::kExists: {
      const WorldSet body = Extension(model, c.body());
      for (World x = 0; x < model.size; ++x)
        if (Successors(model, c.name(), x).intersects(body)) out.insert(x);
      return out;
    }
    case Concept::Kind::kForall: {
      const WorldSet body = Extension(model, c.body());
      WorldSet closed;  // worlds whose successors all satisfy the body
      for (World y = 0; y < model.size; ++y)
        if (Successors(model, c.name(), y).subset_of(body)) closed.insert(y);
      for (World x = 0; x < model.size; ++x)
        if (model.up(x).subset_of(closed)) out.insert(x);
      return out;
    }
  }
  return out;
}

bool Satisfies(const Interpretation& model, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kConcept:
      return Extension(model, f.as_concept()) == model.all();
    case Formula::Kind::kNominal: {
      const World x = NominalWorld(model, f.nominal());
      if (f.body().is_concept()) return model.up(x).subset_of(Extension(model, f.body().as_concept()));
      return Satisfies(model, f.body());
    }
    case Formula::Kind::kRole: {
      const WorldSet ys = model.up(NominalWorld(model, f.object()));
      bool ok = true;
      model.up(NominalWorld(model, f.nominal())).for_each([&](World zx) {
        ok = ok && ys.subset_of(Successors(model, f.role(), zx));
      });
      return ok;
    }
  }
  return false;
}

namespace {

// How one sequent member depends on the quantified worlds.
struct Member {
  enum class Mode { kConstant, kShared, kLabelled };
  Mode mode;
  bool constant = false;  // kConstant
  WorldSet ext;           // kShared / kLabelled
  std::size_t label = 0;  // index into the nominal vector, kLabelled

  bool Holds(World w, const std::vector<World>& z) const {
    switch (mode) {
      case Mode::kConstant:
        return constant;
      case Mode::kShared:
        return ext.contains(w);
      case Mode::kLabelled:
        return ext.contains(z[label]);
    }
    return false;
  }
};

Member Classify(const Interpretation& model, const Formula& f, bool in_antecedent, const SequentOptions& options,
                std::vector<std::string>& labels) {
  Member m{Member::Mode::kConstant, false, WorldSet(), 0};
  switch (f.kind()) {
    case Formula::Kind::kConcept: {
      const WorldSet ext = Extension(model, f.as_concept());
      if (in_antecedent && options.tbox_global && f.as_concept().is(Concept::Kind::kSubs)) {
        m.constant = ext == model.all();
      } else {
        m.mode = Member::Mode::kShared;
        m.ext = ext;
      }
      return m;
    }
    case Formula::Kind::kNominal: {
      NominalWorld(model, f.nominal());
      std::size_t idx = 0;
      while (idx < labels.size() && labels[idx] != f.nominal()) ++idx;
      if (idx == labels.size()) labels.push_back(f.nominal());
      if (f.body().is_concept()) {
        m.mode = Member::Mode::kLabelled;
        m.ext = Extension(model, f.body().as_concept());
        m.label = idx;
      } else {
        m.constant = Satisfies(model, f.body());
      }
      return m;
    }
    case Formula::Kind::kRole:
      m.constant = Satisfies(model, f);
      return m;
  }
  return m;
}

}  // namespace

bool SequentValid(const Interpretation& model, const Sequent& s, SequentOptions options) {
  std::vector<std::string> labels;
  std::vector<Member> ante;
  ante.reserve(s.antecedent.size());
  for (const auto& f : s.antecedent) ante.push_back(Classify(model, f, true, options, labels));
  const Member succ = Classify(model, s.succedent, false, options, labels);

  bool uses_shared = succ.mode == Member::Mode::kShared;
  for (const auto& m : ante) uses_shared = uses_shared || m.mode == Member::Mode::kShared;

  std::vector<std::vector<World>> ranges;
  for (const auto& x : labels) ranges.push_back(model.up(NominalWorld(model, x)).members());

  // Odometer over z ⪰ x^I for every outer nominal x, times the shared world.
  std::vector<std::size_t> pos(ranges.size(), 0);
  std::vector<World> z(ranges.size());
  while (true) {
    for (std::size_t i = 0; i < ranges.size(); ++i) z[i] = ranges[i][pos[i]];
    const int worlds = uses_shared ? model.size : 1;
    for (World w = 0; w < worlds; ++w) {
      bool hyp = true;
      for (const auto& m : ante) {
        if (!m.Holds(w, z)) {
          hyp = false;
          break;
        }
      }
      if (hyp && !succ.Holds(w, z)) return false;
    }
    std::size_t i = 0;
    while (i < ranges.size() && ++pos[i] == ranges[i].size()) pos[i++] = 0;
    if (i == ranges.size()) break;
  }
  return true;
}

Entailment Entails(const ModelSource& models, const Sequent& s, SequentOptions options) {
  std::size_t index = 0;
  while (auto m = models()) {
    if (!SequentValid(*m, s, options)) return Counterexample{std::move(*m), index};
    ++index;
  }
  return Valid{};
}

Entailment Entails(std::span<const Interpretation> models, const Sequent& s, SequentOptions options) {
  for (std::size_t i = 0; i < models.size(); ++i)
    if (!SequentValid(models[i], s, options)) return Counterexample{models[i], i};
  return Valid{};
}

}  // namespace ialc
