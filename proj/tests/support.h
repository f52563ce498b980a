// Generators and brute-force oracles shared by the tests. The oracles
// re-derive results from the definitions with plain containers and do not
// call into the library's evaluator or validator.

#ifndef IALC_TESTS_SUPPORT_H_
#define IALC_TESTS_SUPPORT_H_

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ialc/semantics.h"
#include "ialc/syntax.h"

namespace ialc::testing {

using Rng = std::mt19937_64;

inline int Pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

struct Vocabulary {
  std::vector<std::string> atoms{"A", "B"};
  std::vector<std::string> roles{"R"};
  std::vector<std::string> nominals{"x", "y"};
};

inline Concept RandomConcept(Rng& rng, int depth, const Vocabulary& v = {}) {
  if (depth <= 0 || Pick(rng, 4) == 0) {
    const int k = Pick(rng, static_cast<int>(v.atoms.size()) + 2);
    if (k == 0) return Concept::Top();
    if (k == 1) return Concept::Bot();
    return Concept::Atom(v.atoms[static_cast<std::size_t>(k - 2)]);
  }
  const std::string& role = v.roles[static_cast<std::size_t>(Pick(rng, static_cast<int>(v.roles.size())))];
  switch (Pick(rng, 7)) {
    case 0:
      return Concept::Not(RandomConcept(rng, depth - 1, v));
    case 1:
      return Concept::And(RandomConcept(rng, depth - 1, v), RandomConcept(rng, depth - 1, v));
    case 2:
      return Concept::Or(RandomConcept(rng, depth - 1, v), RandomConcept(rng, depth - 1, v));
    case 3:
      return Concept::Subs(RandomConcept(rng, depth - 1, v), RandomConcept(rng, depth - 1, v));
    case 4:
      return Concept::Exists(role, RandomConcept(rng, depth - 1, v));
    case 5:
      return Concept::Forall(role, RandomConcept(rng, depth - 1, v));
    default:
      return Concept::Atom(v.atoms[static_cast<std::size_t>(Pick(rng, static_cast<int>(v.atoms.size())))]);
  }
}

inline Formula RandomFormula(Rng& rng, int depth, const Vocabulary& v = {}) {
  auto nominal = [&] { return v.nominals[static_cast<std::size_t>(Pick(rng, static_cast<int>(v.nominals.size())))]; };
  switch (Pick(rng, 5)) {
    case 0:
      return Formula::Role(nominal(), v.roles[0], nominal());
    case 1: {
      Formula inner = Formula::At(nominal(), RandomConcept(rng, depth, v));
      return Formula::At(nominal(), inner);
    }
    case 2:
    case 3:
      return Formula::At(nominal(), RandomConcept(rng, depth, v));
    default:
      return RandomConcept(rng, depth, v);
  }
}

// A model as plain data: le[i][j] means i refines to j.
struct PlainModel {
  int n = 1;
  std::vector<std::vector<bool>> le;
  std::map<std::string, std::vector<std::vector<bool>>> roles;
  std::map<std::string, std::vector<bool>> atoms;
};

inline PlainModel ToPlain(const Interpretation& m) {
  PlainModel p;
  p.n = m.size;
  p.le.assign(p.n, std::vector<bool>(p.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) p.le[i][j] = m.refinement.contains(i, j);
  for (const auto& [name, rel] : m.roles) {
    auto& r = p.roles[name];
    r.assign(p.n, std::vector<bool>(p.n, false));
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j) r[i][j] = rel.contains(i, j);
  }
  for (const auto& [name, set] : m.atoms) {
    auto& a = p.atoms[name];
    a.assign(p.n, false);
    for (int i = 0; i < p.n; ++i) a[i] = set.contains(i);
  }
  return p;
}

// Extension computed world by world from the semantic clauses.
inline std::vector<bool> OracleExtension(const PlainModel& m, const Concept& c) {
  std::vector<bool> out(m.n, false);
  auto rel = [&](const std::string& r, int a, int b) {
    auto it = m.roles.find(r);
    return it != m.roles.end() && it->second[a][b];
  };
  switch (c.kind()) {
    case Concept::Kind::kAtom: {
      auto it = m.atoms.find(c.name());
      if (it != m.atoms.end()) out = it->second;
      break;
    }
    case Concept::Kind::kTop:
      out.assign(m.n, true);
      break;
    case Concept::Kind::kBot:
      break;
    case Concept::Kind::kNot: {
      auto e = OracleExtension(m, c.body());
      for (int x = 0; x < m.n; ++x) {
        bool ok = true;
        for (int y = 0; y < m.n; ++y)
          if (m.le[x][y] && e[y]) ok = false;
        out[x] = ok;
      }
      break;
    }
    case Concept::Kind::kAnd:
    case Concept::Kind::kOr: {
      auto l = OracleExtension(m, c.left());
      auto r = OracleExtension(m, c.right());
      for (int x = 0; x < m.n; ++x) out[x] = c.is(Concept::Kind::kAnd) ? (l[x] && r[x]) : (l[x] || r[x]);
      break;
    }
    case Concept::Kind::kSubs: {
      auto l = OracleExtension(m, c.left());
      auto r = OracleExtension(m, c.right());
      for (int x = 0; x < m.n; ++x) {
        bool ok = true;
        for (int y = 0; y < m.n; ++y)
          if (m.le[x][y] && l[y] && !r[y]) ok = false;
        out[x] = ok;
      }
      break;
    }
    case Concept::Kind::kExists: {
      auto e = OracleExtension(m, c.body());
      for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
          if (rel(c.name(), x, y) && e[y]) out[x] = true;
      break;
    }
    case Concept::Kind::kForall: {
      auto e = OracleExtension(m, c.body());
      for (int x = 0; x < m.n; ++x) {
        bool ok = true;
        for (int x2 = 0; x2 < m.n; ++x2)
          for (int y = 0; y < m.n; ++y)
            if (m.le[x][x2] && rel(c.name(), x2, y) && !e[y]) ok = false;
        out[x] = ok;
      }
      break;
    }
  }
  return out;
}

inline bool IsPreorder(const std::vector<std::vector<bool>>& le, int n) {
  for (int i = 0; i < n; ++i) {
    if (!le[i][i]) return false;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k] && !le[i][k]) return false;
  }
  return true;
}

inline bool FrameOk(const std::vector<std::vector<bool>>& le, const std::vector<std::vector<bool>>& r, int n) {
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (!r[w][v]) continue;
      for (int w2 = 0; w2 < n; ++w2) {
        if (!le[w][w2]) continue;
        bool found = false;
        for (int v2 = 0; v2 < n; ++v2) found = found || (r[w2][v2] && le[v][v2]);
        if (!found) return false;  // F1
      }
      for (int v2 = 0; v2 < n; ++v2) {
        if (!le[v][v2]) continue;
        bool found = false;
        for (int w2 = 0; w2 < n; ++w2) found = found || (r[w2][v2] && le[w][w2]);
        if (!found) return false;  // F2
      }
    }
  return true;
}

inline std::vector<std::vector<bool>> Matrix(std::uint64_t bits, int n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (bits >> (i * n + j)) & 1U;
  return m;
}

// Number of legal models with exactly n worlds, counted by brute force over
// all relations and valuations.
inline std::uint64_t OracleModelCount(int n, int atoms, int roles, int nominals) {
  const std::uint64_t cells = std::uint64_t{1} << (n * n);
  std::uint64_t total = 0;
  for (std::uint64_t le_bits = 0; le_bits < cells; ++le_bits) {
    const auto le = Matrix(le_bits, n);
    if (!IsPreorder(le, n)) continue;
    std::uint64_t good_roles = 0;
    for (std::uint64_t r = 0; r < cells; ++r)
      if (FrameOk(le, Matrix(r, n), n)) ++good_roles;
    std::uint64_t up_sets = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      bool ok = true;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (le[i][j] && ((s >> i) & 1U) && !((s >> j) & 1U)) ok = false;
      if (ok) ++up_sets;
    }
    std::uint64_t count = 1;
    for (int k = 0; k < roles; ++k) count *= good_roles;
    for (int k = 0; k < atoms; ++k) count *= up_sets;
    for (int k = 0; k < nominals; ++k) count *= static_cast<std::uint64_t>(n);
    total += count;
  }
  return total;
}

}  // namespace ialc::testing

#endif  // IALC_TESTS_SUPPORT_H_
