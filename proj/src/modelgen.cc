#include "ialc/modelgen.h"

#include <random>
#include <set>

#include "ialc/model_io.h"

namespace ialc {

namespace {

Relation FromMask(std::uint32_t mask, int n) {
  Relation rel(n);
  for (World i = 0; i < n; ++i)
    for (World j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1U) rel.insert(i, j);
  return rel;
}

bool FrameConditionsHold(const Relation& leq, const Relation& r) {
  const int n = leq.size();
  for (World w = 0; w < n; ++w) {
    const WorldSet succ = r.successors(w);
    if (succ.empty()) continue;
    bool ok = true;
    succ.for_each([&](World v) {
      if (!ok) return;
      // F1
      leq.successors(w).for_each([&](World w2) { ok = ok && r.successors(w2).intersects(leq.successors(v)); });
      // F2
      leq.successors(v).for_each([&](World v2) {
        bool found = false;
        leq.successors(w).for_each([&](World w2) { found = found || r.contains(w2, v2); });
        ok = ok && found;
      });
    });
    if (!ok) return false;
  }
  return true;
}

bool IsUpClosed(WorldSet s, const Relation& leq) {
  bool ok = true;
  s.for_each([&](World w) { ok = ok && leq.successors(w).subset_of(s); });
  return ok;
}

template <typename T>
void RequireDistinct(const std::vector<T>& names, const char* what) {
  std::set<T> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw std::invalid_argument(std::string("duplicate ") + what + " name");
}

}  // namespace

void Signature::Check() const {
  RequireDistinct(atoms, "atom");
  RequireDistinct(roles, "role");
  RequireDistinct(nominals, "nominal");
  if (max_worlds < 1 || max_worlds > kMaxWorlds) throw std::invalid_argument("max worlds out of range");
}

Signature SignatureOf(const Sequent& s, int max_worlds) {
  const Symbols sym = CollectSymbols(s);
  Signature sig;
  sig.atoms.assign(sym.atoms.begin(), sym.atoms.end());
  sig.roles.assign(sym.roles.begin(), sym.roles.end());
  sig.nominals.assign(sym.nominals.begin(), sym.nominals.end());
  sig.max_worlds = max_worlds;
  return sig;
}

std::vector<std::uint32_t> Preorders(int n) {
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = std::uint32_t{1} << (n * n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = (mask >> (i * n + i)) & 1U;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (!((mask >> (a * n + b)) & 1U)) continue;
        for (int c = 0; c < n && ok; ++c)
          if (((mask >> (b * n + c)) & 1U) && !((mask >> (a * n + c)) & 1U)) ok = false;
      }
    if (ok) out.push_back(mask);
  }
  return out;
}

ModelEnumerator::ModelEnumerator(Signature sig) : sig_(std::move(sig)) {
  sig_.Check();
  if (sig_.max_worlds > kMaxEnumerableWorlds)
    throw std::invalid_argument("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerableWorlds) +
                                " worlds");
}

bool ModelEnumerator::StartWorldCount(int n) {
  if (n > sig_.max_worlds) return false;
  n_ = n;
  preorders_ = Preorders(n);
  preorder_ = 0;
  ResetBelowPreorder();
  return true;
}

void ModelEnumerator::ResetBelowPreorder() {
  const Relation leq = FromMask(preorders_[preorder_], n_);
  role_candidates_.clear();
  if (!sig_.roles.empty()) {
    const std::uint32_t limit = std::uint32_t{1} << (n_ * n_);
    for (std::uint32_t mask = 0; mask < limit; ++mask)
      if (FrameConditionsHold(leq, FromMask(mask, n_))) role_candidates_.push_back(mask);
  }
  atom_candidates_.clear();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n_); ++bits)
    if (IsUpClosed(WorldSet(bits), leq)) atom_candidates_.push_back(WorldSet(bits));
  role_idx_.assign(sig_.roles.size(), 0);
  atom_idx_.assign(sig_.atoms.size(), 0);
  nominal_idx_.assign(sig_.nominals.size(), 0);
}

bool ModelEnumerator::AdvancePreorder() {
  if (++preorder_ < preorders_.size()) {
    ResetBelowPreorder();
    return true;
  }
  return StartWorldCount(n_ + 1);
}

bool ModelEnumerator::Advance() {
  // Odometer: nominals vary fastest, then atoms, then roles.
  for (std::size_t i = nominal_idx_.size(); i-- > 0;) {
    if (++nominal_idx_[i] < n_) return true;
    nominal_idx_[i] = 0;
  }
  for (std::size_t i = atom_idx_.size(); i-- > 0;) {
    if (++atom_idx_[i] < atom_candidates_.size()) return true;
    atom_idx_[i] = 0;
  }
  for (std::size_t i = role_idx_.size(); i-- > 0;) {
    if (++role_idx_[i] < role_candidates_.size()) return true;
    role_idx_[i] = 0;
  }
  return AdvancePreorder();
}

Interpretation ModelEnumerator::Build() const {
  Interpretation m(n_);
  m.refinement = FromMask(preorders_[preorder_], n_);
  for (std::size_t i = 0; i < sig_.roles.size(); ++i)
    m.roles.emplace(sig_.roles[i], FromMask(role_candidates_[role_idx_[i]], n_));
  for (std::size_t i = 0; i < sig_.atoms.size(); ++i) m.atoms.emplace(sig_.atoms[i], atom_candidates_[atom_idx_[i]]);
  for (std::size_t i = 0; i < sig_.nominals.size(); ++i) m.nominals.emplace(sig_.nominals[i], nominal_idx_[i]);
  return m;
}

std::optional<Interpretation> ModelEnumerator::Next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    done_ = !StartWorldCount(1);
  } else {
    done_ = !Advance();
  }
  if (done_) return std::nullopt;
  return Build();
}

ModelSource ModelEnumerator::AsSource() {
  return [this] { return Next(); };
}

std::map<std::string, WorldSet> HeredityClosure(const std::map<std::string, WorldSet>& valuation,
                                                const Relation& refinement) {
  std::map<std::string, WorldSet> out;
  for (const auto& [name, set] : valuation) {
    WorldSet closed = set;
    set.for_each([&](World w) {
      if (w < refinement.size()) closed |= refinement.successors(w);
    });
    out.emplace(name, closed);
  }
  return out;
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool Coin(double p) { return Uniform() < p; }
  int Below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

Interpretation RandomModel(const Signature& sig, std::uint64_t seed, int retry_budget) {
  sig.Check();
  Rng rng(seed);
  const int n = sig.max_worlds;
  Interpretation m(n);
  for (World a = 0; a < n; ++a)
    for (World b = 0; b < n; ++b)
      if (a != b && rng.Coin(0.3)) m.refinement.insert(a, b);
  ClosePreorder(m.refinement);

  for (const auto& role : sig.roles) {
    bool placed = false;
    for (int attempt = 0; attempt < retry_budget && !placed; ++attempt) {
      const double density = 0.6 * rng.Uniform();
      Relation r(n);
      for (World a = 0; a < n; ++a)
        for (World b = 0; b < n; ++b)
          if (rng.Coin(density)) r.insert(a, b);
      if (FrameConditionsHold(m.refinement, r)) {
        m.roles.emplace(role, std::move(r));
        placed = true;
      }
    }
    if (!placed) throw RetryBudgetExhausted("no F1/F2-compatible relation for role " + role + " within budget");
  }

  std::map<std::string, WorldSet> atoms;
  for (const auto& atom : sig.atoms) {
    WorldSet s;
    for (World w = 0; w < n; ++w)
      if (rng.Coin(0.35)) s.insert(w);
    atoms.emplace(atom, s);
  }
  m.atoms = HeredityClosure(atoms, m.refinement);
  for (const auto& x : sig.nominals) m.nominals.emplace(x, rng.Below(n));
  return m;
}

}  // namespace ialc
