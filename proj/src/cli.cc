#include "ialc/cli.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "ialc/golden.h"
#include "ialc/hilbert.h"
#include "ialc/model_io.h"
#include "ialc/modelgen.h"
#include "ialc/parser.h"
#include "ialc/proof_io.h"
#include "ialc/prover.h"

namespace ialc {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::string Location(const std::string& file, const ParseError& e) { return file + ":" + e.what(); }

Problem LoadProblem(const std::string& path) {
  const std::string text = ReadFile(path);
  try {
    return ParseProblem(text);
  } catch (const ParseError& e) {
    throw InputError(Location(path, e));
  }
}

Interpretation LoadModel(const std::string& path, std::ostream& err) {
  LoadedModel loaded = ParseModel(ReadFile(path));
  for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
  return std::move(loaded.model);
}

std::string PathString(const std::vector<std::size_t>& path) {
  std::string out = "root";
  for (auto i : path) out += "." + std::to_string(i);
  return out;
}

void PrintTree(std::ostream& out, const ProofTree& t, int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << ToString(t.rule) << ": " << Render(t.conclusion)
      << "\n";
  for (const auto& p : t.premises) PrintTree(out, p, indent + 1);
}

std::string WorldList(const Interpretation& m, WorldSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](World w) {
    out += (first ? "" : ", ") + m.world_name(w);
    first = false;
  });
  return out + "}";
}

std::vector<std::string> Names(const std::string& alphabet, int count, const std::string& what) {
  if (count < 0 || count > static_cast<int>(alphabet.size()))
    throw InputError(what + " count must be between 0 and " + std::to_string(alphabet.size()));
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.emplace_back(1, alphabet[static_cast<std::size_t>(i)]);
  return out;
}

int Prove(const std::string& file, int depth, std::size_t max_visited, const std::string& emit, std::ostream& out) {
  const Sequent goal = LoadProblem(file).AsSequent();
  out << "goal: " << Render(goal) << "\n";
  const ProofResult result = ialc::Prove(goal, Budget{depth, max_visited});
  if (const auto* u = std::get_if<Unknown>(&result)) {
    out << "result: unknown\n";
    out << "reason: " << (u->budget_exhausted ? "visited-sequent cap reached" : "no proof within depth bound")
        << "\n";
    out << "visited: " << u->visited << "\n";
    return kUnknown;
  }
  const ProofTree& tree = std::get<Proved>(result).tree;
  out << "result: proved\n";
  out << "height: " << tree.height() << "\n";
  out << "nodes: " << tree.size() << "\n";
  PrintTree(out, tree, 1);
  if (!emit.empty()) {
    WriteFile(emit, SerializeProofTree(tree));
    out << "proof written to " << emit << "\n";
  }
  return kSuccess;
}

int Check(const std::string& file, std::ostream& out) {
  const std::string text = ReadFile(file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const ProofTree tree = [&] {
      try {
        return ParseProofTree(text);
      } catch (const ParseError& e) {
        throw InputError(file + ": " + e.what());
      } catch (const ProofFormatError& e) {
        throw InputError(file + ": " + e.what());
      }
    }();
    out << "sequent proof of " << Render(tree.conclusion) << "\n";
    const ProofVerdict v = CheckProof(tree);
    if (const auto* r = std::get_if<ProofRejected>(&v)) {
      out << "rejected at " << PathString(r->path) << ": " << r->reason << "\n";
      return kRefuted;
    }
    out << "accepted: " << tree.size() << " nodes, height " << tree.height() << "\n";
    return kSuccess;
  }
  hilbert::Proof proof;
  try {
    proof = hilbert::ParseProof(text);
  } catch (const ParseError& e) {
    throw InputError(Location(file, e));
  }
  if (proof.empty()) throw InputError(file + ": empty proof");
  out << "hilbert proof of " << Render(proof.back().statement) << "\n";
  const hilbert::Verdict v = hilbert::Check(proof);
  if (const auto* r = std::get_if<hilbert::Rejected>(&v)) {
    out << "rejected at line " << r->line << ": " << r->reason << "\n";
    return kRefuted;
  }
  out << "accepted: " << proof.size() << " lines\n";
  return kSuccess;
}

int Countermodel(const std::string& file, int max_worlds, const std::string& emit, SequentOptions options,
                 std::ostream& out) {
  if (max_worlds < 1 || max_worlds > ModelEnumerator::kMaxEnumerableWorlds)
    throw InputError("--max-worlds must be between 1 and " + std::to_string(ModelEnumerator::kMaxEnumerableWorlds));
  const Sequent goal = LoadProblem(file).AsSequent();
  out << "goal: " << Render(goal) << "\n";
  Signature sig;
  sig.max_worlds = max_worlds;
  const auto model = FindCountermodel(goal, sig, options);
  if (!model) {
    out << "result: no countermodel with at most " << max_worlds << " world(s)\n";
    return kSuccess;
  }
  out << "result: countermodel with " << model->size << " world(s)\n";
  const std::string text = SerializeModel(*model);
  out << text;
  if (!emit.empty()) {
    WriteFile(emit, text);
    out << "model written to " << emit << "\n";
  }
  return kRefuted;
}

int Eval(const std::string& model_file, const std::string& formula, const std::string& sequent,
         const std::string& problem, SequentOptions options, std::ostream& out, std::ostream& err) {
  const int given = !formula.empty() + !sequent.empty() + !problem.empty();
  if (given != 1) throw InputError("eval needs exactly one of --formula, --sequent, --problem");
  const Interpretation model = LoadModel(model_file, err);
  try {
    if (!formula.empty()) {
      const Formula f = ParseFormula(formula);
      out << "formula: " << Render(f) << "\n";
      const bool ok = Satisfies(model, f);
      if (f.is_concept()) {
        const WorldSet ext = Extension(model, f.as_concept());
        out << "extension: " << WorldList(model, ext) << "\n";
        if (ok) {
          out << "valid at all worlds\n";
        } else {
          WorldSet missing(model.all().bits() & ~ext.bits());
          out << "not valid: fails at " << WorldList(model, missing) << "\n";
        }
      } else {
        out << (ok ? "satisfied" : "not satisfied") << "\n";
      }
      return ok ? kSuccess : kRefuted;
    }
    const Sequent s = !sequent.empty() ? ParseSequent(sequent) : LoadProblem(problem).AsSequent();
    out << "sequent: " << Render(s) << "\n";
    const bool ok = SequentValid(model, s, options);
    out << (ok ? "sequent valid in this model" : "sequent not valid in this model") << "\n";
    return ok ? kSuccess : kRefuted;
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const UnassignedNominal& e) {
    throw InputError(e.what());
  }
}

int Axioms(const std::string& dir, std::ostream& out) {
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InputError("cannot create " + dir + ": " + ec.message());
  }
  bool all_ok = true;
  for (const auto& g : GoldenDerivations()) {
    const ProofVerdict v = CheckProof(g.tree);
    out << g.name << ": " << Render(g.tree.conclusion) << "\n";
    if (const auto* r = std::get_if<ProofRejected>(&v)) {
      all_ok = false;
      out << "  rejected at " << PathString(r->path) << ": " << r->reason << "\n";
    } else {
      out << "  accepted: " << g.tree.size() << " nodes, height " << g.tree.height() << "\n";
    }
    if (!dir.empty()) {
      const std::string path = (std::filesystem::path(dir) / (g.name + ".prf")).string();
      WriteFile(path, SerializeProofTree(g.tree));
      // Re-read what was written so the files themselves are what got checked.
      if (!std::holds_alternative<ProofAccepted>(CheckProof(ParseProofTree(ReadFile(path))))) all_ok = false;
      out << "  written to " << path << "\n";
    }
  }
  return all_ok ? kSuccess : kRefuted;
}

int Models(int worlds, int atoms, int roles, int nominals, bool count_only, std::ostream& out) {
  Signature sig;
  sig.atoms = Names("ABCDEFGHIJKLMNOPQRSTUVWXYZ", atoms, "atom");
  sig.roles = Names("RSTUVWXYZ", roles, "role");
  sig.nominals = Names("xyzuvw", nominals, "nominal");
  sig.max_worlds = worlds;
  if (worlds < 1 || worlds > ModelEnumerator::kMaxEnumerableWorlds)
    throw InputError("--worlds must be between 1 and " + std::to_string(ModelEnumerator::kMaxEnumerableWorlds));
  ModelEnumerator models(sig);
  std::size_t count = 0;
  while (auto m = models.Next()) {
    if (!count_only) out << "# model " << count << "\n" << SerializeModel(*m);
    ++count;
  }
  out << "models: " << count << "\n";
  return kSuccess;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reasoner for intuitionistic ALC", "ialc"};
  app.require_subcommand(1);

  std::string file, emit, model_file, formula, sequent, problem, dir;
  int depth = 24, max_worlds = 0, worlds = 0, atoms = 0, roles = 0, nominals = 0;
  std::size_t max_visited = 100000;
  bool tbox_local = false, count_only = false;

  auto* prove = app.add_subcommand("prove", "Search for a cut-free proof of a problem's goal");
  prove->add_option("problem", file, "Problem file")->required();
  prove->add_option("--depth", depth, "Maximum branch depth")->check(CLI::PositiveNumber);
  prove->add_option("--max-visited", max_visited, "Cap on visited sequents")->check(CLI::PositiveNumber);
  prove->add_option("--emit-proof", emit, "Write the proof tree here");
  prove->add_flag("--tbox-local", tbox_local, "Accepted for symmetry with countermodel; proofs are reading-independent");

  auto* check = app.add_subcommand("check", "Check a sequent proof (JSON) or Hilbert proof file");
  check->add_option("prooffile", file, "Proof file")->required();

  auto* counter = app.add_subcommand("countermodel", "Search enumerated models for one falsifying the goal");
  counter->add_option("problem", file, "Problem file")->required();
  counter->add_option("--max-worlds", max_worlds, "Largest model size")->required();
  counter->add_option("--emit-model", emit, "Write the model here");
  counter->add_flag("--tbox-local", tbox_local, "Read antecedent subsumptions locally");

  auto* eval = app.add_subcommand("eval", "Evaluate a formula or sequent in a model");
  eval->add_option("--model", model_file, "Model file")->required();
  eval->add_option("--formula", formula, "Formula text");
  eval->add_option("--sequent", sequent, "Sequent text");
  eval->add_option("--problem", problem, "Problem file; its goal sequent is evaluated");
  eval->add_flag("--tbox-local", tbox_local, "Read antecedent subsumptions locally");

  auto* axioms = app.add_subcommand("axioms", "Check the five role-axiom derivations and optionally write them");
  axioms->add_option("--out", dir, "Directory for the proof files");

  auto* models = app.add_subcommand("models", "Enumerate validated models");
  models->add_option("--worlds", worlds, "Largest model size")->required();
  models->add_option("--atoms", atoms, "Number of atoms (A, B, ...)")->required();
  models->add_option("--roles", roles, "Number of roles (R, S, ...)")->required();
  models->add_option("--nominals", nominals, "Number of nominals (x, y, ...)");
  models->add_flag("--count-only", count_only, "Print only the count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const SequentOptions options{!tbox_local};
  try {
    if (*prove) return Prove(file, depth, max_visited, emit, out);
    if (*check) return Check(file, out);
    if (*counter) return Countermodel(file, max_worlds, emit, options, out);
    if (*eval) return Eval(model_file, formula, sequent, problem, options, out, err);
    if (*axioms) return Axioms(dir, out);
    if (*models) return Models(worlds, atoms, roles, nominals, count_only, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ModelFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ialc
