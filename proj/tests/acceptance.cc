// Runs the eight acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ialc/calculus.h"
#include "ialc/cli.h"
#include "ialc/golden.h"
#include "ialc/hilbert.h"
#include "ialc/modelgen.h"
#include "ialc/parser.h"
#include "ialc/proof_io.h"
#include "ialc/prover.h"
#include "support.h"

namespace ialc {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Collects the first few failure messages of a criterion.
struct Tally {
  int failures = 0;
  std::vector<std::string> notes;

  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

double Seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

std::vector<Interpretation> Enumerate(const Signature& sig) {
  ModelEnumerator e(sig);
  std::vector<Interpretation> out;
  while (auto m = e.Next()) out.push_back(std::move(*m));
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::size_t>> Paths(const ProofTree& t) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t i = 0; i < t.premises.size(); ++i)
    for (auto p : Paths(t.premises[i])) {
      p.insert(p.begin(), i);
      out.push_back(std::move(p));
    }
  return out;
}

ProofTree& At(ProofTree& t, const std::vector<std::size_t>& path) {
  ProofTree* node = &t;
  for (auto i : path) node = &node->premises[i];
  return *node;
}

void GoldenCorpus(Tally& t, std::string& detail) {
  const auto start = Clock::now();
  const auto built = GoldenDerivations();
  int mutants = 0;
  for (const auto& g : built) {
    const fs::path file = fs::path(IALC_DATA_DIR) / "golden" / (g.name + ".prf");
    ProofTree tree = g.tree;
    try {
      tree = ParseProofTree(ReadFile(file));
    } catch (const std::exception& e) {
      t.Expect(false, file.string() + ": " + e.what());
      continue;
    }
    t.Expect(tree == g.tree, g.name + ": stored file differs from the built derivation");
    t.Expect(std::holds_alternative<ProofAccepted>(CheckProof(tree)), g.name + " rejected");
    for (const auto& path : Paths(tree))
      for (const auto& id : AllRuleIds()) {
        ProofTree m = tree;
        if (At(m, path).rule == id) continue;
        At(m, path).rule = id;
        ++mutants;
        t.Expect(std::holds_alternative<ProofRejected>(CheckProof(m)), g.name + " mutant " + ToString(id) + " accepted");
      }
  }
  const double secs = Seconds(start);
  t.Expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  detail = std::to_string(built.size()) + " trees accepted, " + std::to_string(mutants) + " label mutants rejected";
}

void ProverReproduces(Tally& t, std::string& detail) {
  std::ostringstream heights;
  for (const auto& g : GoldenDerivations()) {
    const auto start = Clock::now();
    const ProofResult r = Prove(g.tree.conclusion, {16, 100000});
    const double secs = Seconds(start);
    t.Expect(secs < 1.0, g.name + " took " + std::to_string(secs) + " s");
    const auto* p = std::get_if<Proved>(&r);
    t.Expect(p != nullptr, g.name + " not proved at depth 16");
    if (!p) continue;
    t.Expect(std::holds_alternative<ProofAccepted>(CheckProof(p->tree)), g.name + " proof rejected by checker");
    t.Expect(p->tree.conclusion == g.tree.conclusion, g.name + " proof has the wrong root");
    heights << (heights.tellp() > 0 ? "," : "") << p->tree.height();
  }
  detail = "heights " + heights.str();
}

std::vector<Sequent> SoundnessCorpus() {
  std::vector<Sequent> out;
  for (const auto& g : GoldenDerivations()) out.push_back(g.tree.conclusion);
  testing::Rng rng(2024);
  for (int i = 0; i < 8; ++i) {
    const Concept c = testing::RandomConcept(rng, 2);
    const Concept d = testing::RandomConcept(rng, 2);
    out.emplace_back(FormulaSet{Formula(Concept::And(c, d))}, Formula(Concept::Or(d, c)));
    out.emplace_back(FormulaSet{Formula(Concept::Forall("R", Concept::Subs(c, d)))},
                     Formula(Concept::Subs(Concept::Exists("R", c), Concept::Exists("R", d))));
    out.emplace_back(FormulaSet{Formula(Concept::Forall("R", Concept::Subs(c, d)))},
                     Formula(Concept::Subs(Concept::Forall("R", c), Concept::Forall("R", d))));
    out.emplace_back(FormulaSet{Formula::At("x", Concept::Exists("R", Concept::Or(c, d)))},
                     Formula::At("x", Concept::Or(Concept::Exists("R", c), Concept::Exists("R", d))));
    out.emplace_back(FormulaSet{Formula::At("x", Concept::Forall("R", c)), Formula::Role("x", "R", "y")},
                     Formula::At("y", c));
  }
  return out;
}

void Soundness(Tally& t, std::string& detail) {
  const auto start = Clock::now();
  const Signature small{{"A", "B"}, {"R"}, {"x", "y"}, 2};
  Signature three = small;
  three.max_worlds = 3;
  const auto models = Enumerate(small);
  std::vector<Interpretation> samples;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) samples.push_back(RandomModel(three, seed));
  int proved = 0;
  long checks = 0;
  for (const auto& s : SoundnessCorpus()) {
    const ProofResult r = Prove(s, {16, 100000});
    if (!std::holds_alternative<Proved>(r)) continue;
    ++proved;
    t.Expect(std::holds_alternative<ProofAccepted>(CheckProof(std::get<Proved>(r).tree)), Render(s) + " proof rejected");
    for (bool global : {true, false}) {
      for (const auto* pool : std::vector<const std::vector<Interpretation>*>{&models, &samples})
        for (const auto& m : *pool) {
          ++checks;
          t.Expect(SequentValid(m, s, {global}), Render(s) + " fails in a model");
        }
    }
  }
  t.Expect(proved >= 30, "only " + std::to_string(proved) + " proved sequents");
  const double secs = Seconds(start);
  t.Expect(secs < 300.0, "took " + std::to_string(secs) + " s");
  detail = std::to_string(proved) + " proved sequents, " + std::to_string(models.size()) + " enumerated + " +
           std::to_string(samples.size()) + " sampled models, " + std::to_string(checks) + " checks";
}

int Cli(const std::vector<std::string>& args, std::string* output = nullptr) {
  std::ostringstream out, err;
  const int status = Run(args, out, err);
  if (output) *output = out.str() + err.str();
  return status;
}

void Discrimination(Tally& t, std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "ialc_acceptance";
  fs::create_directories(dir);
  int found = 0;
  for (const char* goal : {"A | not A", "(not not A) -> A"}) {
    const Sequent s = ParseSequent(std::string("|- ") + goal);
    const auto model = FindCountermodel(s, Signature{{}, {}, {}, 2});
    t.Expect(model.has_value() && model->size <= 2, std::string(goal) + ": no countermodel with <= 2 worlds");
    const ProofResult r = Prove(s, {24, 100000});
    t.Expect(std::holds_alternative<Unknown>(r), std::string(goal) + ": search returned a proof");

    const std::string problem = (dir / "goal.ialc").string();
    const std::string model_file = (dir / "model.json").string();
    std::ofstream(problem) << "goal:\n  " << goal << "\n";
    std::string out;
    t.Expect(Cli({"countermodel", problem, "--max-worlds", "2", "--emit-model", model_file}, &out) == kRefuted,
             std::string(goal) + ": countermodel command: " + out);
    t.Expect(Cli({"eval", "--model", model_file, "--problem", problem}, &out) == kRefuted &&
                 out.find("sequent not valid in this model") != std::string::npos,
             std::string(goal) + ": eval did not confirm: " + out);
    found += model.has_value();
  }
  fs::remove_all(dir);
  detail = std::to_string(found) + "/2 refuted with <= 2 worlds, both Unknown at depth 24";
}

std::vector<Interpretation> RandomModels(int count, int min_worlds, int max_worlds, std::uint64_t seed0) {
  std::vector<Interpretation> out;
  for (int i = 0; i < count; ++i) {
    const int n = min_worlds + i % (max_worlds - min_worlds + 1);
    out.push_back(RandomModel(Signature{{"A", "B"}, {"R"}, {}, n}, seed0 + static_cast<std::uint64_t>(i)));
  }
  return out;
}

void SemanticIdentities(Tally& t, std::string& detail) {
  auto models = Enumerate(Signature{{"A", "B"}, {"R"}, {}, 2});
  const std::size_t enumerated = models.size();
  for (auto& m : RandomModels(500, 3, 4, 7000)) models.push_back(std::move(m));
  testing::Rng rng(5);
  long checks = 0;
  for (const auto& m : models) {
    t.Expect(Extension(m, Concept::Exists("R", Concept::Bot())).empty(), "some R.bot is inhabited");
    for (int k = 0; k < 4; ++k) {
      const Concept c = testing::RandomConcept(rng, 3);
      const Concept d = testing::RandomConcept(rng, 3);
      const WorldSet lhs = Extension(m, Concept::Exists("R", Concept::Or(c, d)));
      const WorldSet rhs = Extension(m, Concept::Exists("R", c)) | Extension(m, Concept::Exists("R", d));
      t.Expect(lhs == rhs, "some R.(C | D) differs for C = " + Render(c) + ", D = " + Render(d));
      ++checks;
    }
  }
  detail = std::to_string(enumerated) + " enumerated + 500 random models, " + std::to_string(checks) +
           " disjunction checks";
}

void Heredity(Tally& t, std::string& detail) {
  testing::Rng rng(17);
  const auto models = RandomModels(250, 1, 4, 9000);
  int pairs = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Interpretation& m = models[static_cast<std::size_t>(trial) % models.size()];
    const Concept c = testing::RandomConcept(rng, 4);
    const World w = static_cast<World>(testing::Pick(rng, m.size));
    const auto ups = m.up(w).members();
    const World v = ups[static_cast<std::size_t>(testing::Pick(rng, static_cast<int>(ups.size())))];
    const WorldSet ext = Extension(m, c);
    pairs += w != v;
    t.Expect(!ext.contains(w) || ext.contains(v), "monotonicity fails for " + Render(c));
    t.Expect(Extension(m, Concept::Not(c)) == Extension(m, Concept::Subs(c, Concept::Bot())),
             "not C differs from C -> bot for " + Render(c));
    t.Expect(Extension(m, Concept::Top()) == Extension(m, Concept::Not(Concept::Bot())), "top differs from not bot");
  }
  detail = "10000 trials, " + std::to_string(pairs) + " with a proper refinement";
}

void HilbertSoundness(Tally& t, std::string& detail) {
  using namespace hilbert;
  const auto models = Enumerate(Signature{{"A", "B"}, {"R"}, {}, 2});
  testing::Rng rng(23);
  long checks = 0;
  for (int i = 0; i < 50; ++i) {
    const Substitution s{{{"C", testing::RandomConcept(rng, 2)},
                          {"D", testing::RandomConcept(rng, 2)},
                          {"E", testing::RandomConcept(rng, 2)}},
                         "R"};
    std::vector<Concept> instances;
    for (int id = 1; id <= kIplSchemaCount; ++id) instances.push_back(IplInstance(id, s));
    for (int id = 1; id <= kRoleAxiomCount; ++id) instances.push_back(AxiomInstance(id, s));
    for (const auto& c : instances)
      for (const auto& m : models) {
        ++checks;
        t.Expect(Extension(m, c) == m.all(), "instance not valid: " + Render(c));
      }
  }
  Proof p = IdentityProof(ParseConcept("all R.A -> some R.B"));
  p.push_back({Concept::Forall("R", p.back().statement), Necessitation{static_cast<int>(p.size()), "R"}});
  t.Expect(std::holds_alternative<Accepted>(Check(p)), "machine-built proof rejected");
  int mutants = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Proof bad = p;
    bad[k].statement = Concept::Subs(bad[k].statement, Concept::Atom("Fresh"));
    ++mutants;
    t.Expect(std::holds_alternative<Rejected>(Check(bad)), "mutation of line " + std::to_string(k + 1) + " accepted");
  }
  detail = std::to_string(checks) + " instance checks over " + std::to_string(models.size()) + " models, " +
           std::to_string(mutants) + " line mutants rejected";
}

void ParserRoundTrip(Tally& t, std::string& detail) {
  testing::Rng rng(3);
  const testing::Vocabulary v{{"A", "B", "Cat"}, {"R", "Has"}, {"x", "y"}};
  for (int i = 0; i < 1000; ++i) {
    FormulaSet ante;
    for (int k = testing::Pick(rng, 3); k > 0; --k) ante.insert(testing::RandomFormula(rng, 4, v));
    const Sequent s(ante, testing::RandomFormula(rng, 4, v));
    try {
      t.Expect(ParseSequent(Render(s)) == s, "round trip changed " + Render(s));
    } catch (const std::exception& e) {
      t.Expect(false, Render(s) + ": " + e.what());
    }
  }
  // Malformed inputs: hand-picked ones plus random token soup.
  std::vector<std::string> bad{"", "(", "A)", "some R A", "x :", "R(x)", "A |- ", "|-", "A -> ", "not", "A B", "&"};
  const std::vector<std::string> tokens{"A", "x", "R", "(", ")", "&", "|", "->", "not", "some", "all", ".", ":",
                                        "|-", ";", ",", "top", "bot", "?", "\n"};
  for (int i = 0; i < 1000; ++i) {
    std::string text;
    for (int k = 1 + testing::Pick(rng, 8); k > 0; --k) text += tokens[static_cast<std::size_t>(testing::Pick(rng, 20))] + " ";
    bad.push_back(text);
  }
  int errors = 0;
  for (const auto& text : bad) {
    try {
      ParseSequent(text);
    } catch (const ParseError& e) {
      ++errors;
      t.Expect(e.line() >= 1 && e.column() >= 1, "error without a position for '" + text + "'");
    } catch (const std::exception& e) {
      t.Expect(false, "unexpected exception for '" + text + "': " + e.what());
    }
  }
  t.Expect(errors >= 12, "hand-picked malformed inputs were accepted");
  detail = "1000 round trips, " + std::to_string(errors) + " positioned parse errors";
}

}  // namespace
}  // namespace ialc

int main() {
  using namespace ialc;
  struct Criterion {
    const char* name;
    std::function<void(Tally&, std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {"golden derivation corpus", GoldenCorpus},
      {"prover derives the five role axioms", ProverReproduces},
      {"soundness of proved sequents", Soundness},
      {"intuitionistic discrimination", Discrimination},
      {"semantic identities", SemanticIdentities},
      {"heredity and definability", Heredity},
      {"hilbert soundness and checking", HilbertSoundness},
      {"parser round trip and errors", ParserRoundTrip},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Tally tally;
    std::string detail;
    const auto start = Clock::now();
    try {
      c.run(tally, detail);
    } catch (const std::exception& e) {
      tally.Expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = tally.failures == 0;
    failed += !ok;
    std::printf("[%s] %d %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", index, c.name, detail.c_str(), Seconds(start));
    for (const auto& note : tally.notes) std::printf("       %s\n", note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
