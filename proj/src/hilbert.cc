#include "ialc/hilbert.h"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ialc/parser.h"

namespace ialc::hilbert {

namespace {

const Concept& Bind(const Substitution& s, const char* var) {
  auto it = s.concepts.find(var);
  if (it == s.concepts.end()) throw MissingBinding(std::string("no binding for ") + var);
  return it->second;
}

const std::string& BindRole(const Substitution& s) {
  if (!s.role) throw MissingBinding("no binding for R");
  return *s.role;
}

Concept Imp(Concept a, Concept b) { return Concept::Subs(std::move(a), std::move(b)); }

}  // namespace

Concept IplInstance(int id, const Substitution& s) {
  auto C = [&] { return Bind(s, "C"); };
  auto D = [&] { return Bind(s, "D"); };
  auto E = [&] { return Bind(s, "E"); };
  switch (id) {
    case 1:
      return Imp(C(), Imp(D(), C()));
    case 2:
      return Imp(Imp(C(), Imp(D(), E())), Imp(Imp(C(), D()), Imp(C(), E())));
    case 3:
      return Imp(Concept::And(C(), D()), C());
    case 4:
      return Imp(Concept::And(C(), D()), D());
    case 5:
      return Imp(C(), Imp(D(), Concept::And(C(), D())));
    case 6:
      return Imp(C(), Concept::Or(C(), D()));
    case 7:
      return Imp(D(), Concept::Or(C(), D()));
    case 8:
      return Imp(Imp(C(), E()), Imp(Imp(D(), E()), Imp(Concept::Or(C(), D()), E())));
    case 9:
      return Imp(Concept::Bot(), C());
    case 10:
      return Imp(Concept::Not(C()), Imp(C(), Concept::Bot()));
    case 11:
      return Imp(Imp(C(), Concept::Bot()), Concept::Not(C()));
    default:
      throw std::invalid_argument("no IPL schema a" + std::to_string(id));
  }
}

Concept AxiomInstance(int id, const Substitution& s) {
  auto C = [&] { return Bind(s, "C"); };
  auto D = [&] { return Bind(s, "D"); };
  switch (id) {
    case 1: {
      const std::string& R = BindRole(s);
      return Imp(Concept::Forall(R, Imp(C(), D())), Imp(Concept::Forall(R, C()), Concept::Forall(R, D())));
    }
    case 2: {
      const std::string& R = BindRole(s);
      return Imp(Concept::Forall(R, Imp(C(), D())), Imp(Concept::Exists(R, C()), Concept::Exists(R, D())));
    }
    case 3: {
      const std::string& R = BindRole(s);
      return Imp(Concept::Exists(R, Concept::Or(C(), D())), Concept::Or(Concept::Exists(R, C()), Concept::Exists(R, D())));
    }
    case 4:
      return Imp(Concept::Exists(BindRole(s), Concept::Bot()), Concept::Bot());
    case 5: {
      const std::string& R = BindRole(s);
      return Imp(Imp(Concept::Exists(R, C()), Concept::Forall(R, D())), Concept::Forall(R, Imp(C(), D())));
    }
    default:
      throw std::invalid_argument("no role axiom " + std::to_string(id));
  }
}

Verdict Check(const Proof& proof) {
  for (std::size_t k = 0; k < proof.size(); ++k) {
    const int line = static_cast<int>(k) + 1;
    const Line& cur = proof[k];
    auto earlier = [&](int i) { return i >= 1 && i < line; };
    auto reject = [&](std::string why) -> Verdict { return Rejected{line, std::move(why)}; };

    if (const auto* ipl = std::get_if<IplStep>(&cur.why)) {
      if (ipl->schema < 1 || ipl->schema > kIplSchemaCount) return reject("unknown IPL schema");
      try {
        if (IplInstance(ipl->schema, ipl->subst) != cur.statement)
          return reject("not an instance of IPL schema a" + std::to_string(ipl->schema));
      } catch (const MissingBinding& e) {
        return reject(e.what());
      }
    } else if (const auto* ax = std::get_if<AxiomStep>(&cur.why)) {
      if (ax->axiom < 1 || ax->axiom > kRoleAxiomCount) return reject("unknown role axiom");
      try {
        if (AxiomInstance(ax->axiom, ax->subst) != cur.statement)
          return reject("not an instance of role axiom " + std::to_string(ax->axiom));
      } catch (const MissingBinding& e) {
        return reject(e.what());
      }
    } else if (const auto* mp = std::get_if<ModusPonens>(&cur.why)) {
      if (!earlier(mp->premise) || !earlier(mp->implication)) return reject("mp must cite earlier lines");
      const Concept& imp = proof[mp->implication - 1].statement;
      if (imp != Concept::Subs(proof[mp->premise - 1].statement, cur.statement))
        return reject("line " + std::to_string(mp->implication) + " is not line " + std::to_string(mp->premise) +
                      " -> this line");
    } else if (const auto* nec = std::get_if<Necessitation>(&cur.why)) {
      if (!earlier(nec->premise)) return reject("nec must cite an earlier line");
      if (cur.statement != Concept::Forall(nec->role, proof[nec->premise - 1].statement))
        return reject("not all " + nec->role + ". applied to line " + std::to_string(nec->premise));
    }
  }
  return Accepted{};
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> SplitWords(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineReader {
 public:
  LineReader(int line, std::string_view text, std::size_t offset) : line_(line), text_(text), offset_(offset) {}

  [[noreturn]] void Fail(std::string_view at, std::vector<std::string> expected, std::string found) const {
    const int column = static_cast<int>(offset_ + static_cast<std::size_t>(at.data() - text_.data())) + 1;
    throw ParseError(line_, column, std::move(expected), std::move(found));
  }

  int Number(std::string_view word) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) Fail(word, {"a line number"}, "'" + std::string(word) + "'");
    return value;
  }

  Concept ConceptAt(std::string_view piece) const {
    try {
      return ParseConcept(piece);
    } catch (const ParseError& e) {
      const int column = static_cast<int>(offset_ + static_cast<std::size_t>(piece.data() - text_.data())) + e.column();
      throw ParseError(line_, column, e.expected(), e.found());
    }
  }

  Substitution Bindings(std::string_view rest) const {
    Substitution s;
    rest = Trim(rest);
    if (rest.empty()) return s;
    if (rest.front() != '[' || rest.back() != ']') Fail(rest, {"'[' bindings ']'"}, "'" + std::string(rest) + "'");
    std::string_view inner = rest.substr(1, rest.size() - 2);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i < inner.size() && inner[i] == '(') ++depth;
      if (i < inner.size() && inner[i] == ')') --depth;
      if (i < inner.size() && !(inner[i] == ',' && depth == 0)) continue;
      std::string_view item = Trim(inner.substr(start, i - start));
      start = i + 1;
      if (item.empty()) continue;
      const auto eq = item.find(":=");
      if (eq == std::string_view::npos) Fail(item, {"'VAR:=value'"}, "'" + std::string(item) + "'");
      const std::string var(Trim(item.substr(0, eq)));
      std::string_view value = Trim(item.substr(eq + 2));
      if (var == "R") {
        if (!IsConceptName(value)) Fail(value, {"a role name"}, "'" + std::string(value) + "'");
        s.role = std::string(value);
      } else if (var == "C" || var == "D" || var == "E") {
        s.concepts.insert_or_assign(var, ConceptAt(value));
      } else {
        Fail(item, {"C", "D", "E", "R"}, "'" + var + "'");
      }
    }
    return s;
  }

 private:
  int line_;
  std::string_view text_;
  std::size_t offset_;
};

std::string RenderBindings(const Substitution& s) {
  std::string out;
  for (const auto& [var, c] : s.concepts) out += (out.empty() ? "" : ", ") + var + ":=" + Render(c);
  if (s.role) out += (out.empty() ? "" : ", ") + std::string("R:=") + *s.role;
  return "[" + out + "]";
}

}  // namespace

Proof ParseProof(std::string_view text) {
  Proof proof;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (Trim(raw).empty()) continue;

    const LineReader reader(line_no, raw, 0);
    const auto semi = raw.rfind(';');
    if (semi == std::string_view::npos) reader.Fail(raw.substr(raw.size()), {"'; justification'"}, "end of line");
    const Concept stated = reader.ConceptAt(raw.substr(0, semi));
    const std::string_view just = raw.substr(semi + 1);
    const auto words = SplitWords(just);
    if (words.empty()) reader.Fail(just, {"ipl", "ik", "mp", "nec"}, "end of line");

    const std::string_view kind = words[0];
    if (kind == "ipl" || kind == "ik") {
      if (words.size() < 2) reader.Fail(just.substr(just.size()), {"a schema id"}, "end of line");
      std::string_view id = words[1];
      const std::string_view after = just.substr(static_cast<std::size_t>(id.data() + id.size() - just.data()));
      if (kind == "ipl") {
        if (id.size() < 2 || id[0] != 'a') reader.Fail(id, {"a1..a11"}, "'" + std::string(id) + "'");
        proof.push_back({stated, IplStep{reader.Number(id.substr(1)), reader.Bindings(after)}});
      } else {
        proof.push_back({stated, AxiomStep{reader.Number(id), reader.Bindings(after)}});
      }
    } else if (kind == "mp") {
      if (words.size() != 3) reader.Fail(words[0], {"mp <line> <line>"}, "'" + std::string(Trim(just)) + "'");
      proof.push_back({stated, ModusPonens{reader.Number(words[1]), reader.Number(words[2])}});
    } else if (kind == "nec") {
      if (words.size() != 3 || !IsConceptName(words[2]))
        reader.Fail(words[0], {"nec <line> <Role>"}, "'" + std::string(Trim(just)) + "'");
      proof.push_back({stated, Necessitation{reader.Number(words[1]), std::string(words[2])}});
    } else {
      reader.Fail(kind, {"ipl", "ik", "mp", "nec"}, "'" + std::string(kind) + "'");
    }
  }
  return proof;
}

std::string RenderProof(const Proof& proof) {
  std::ostringstream os;
  for (const auto& line : proof) {
    os << Render(line.statement) << " ; ";
    std::visit(
        [&](const auto& j) {
          using T = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<T, IplStep>) os << "ipl a" << j.schema << ' ' << RenderBindings(j.subst);
          else if constexpr (std::is_same_v<T, AxiomStep>) os << "ik " << j.axiom << ' ' << RenderBindings(j.subst);
          else if constexpr (std::is_same_v<T, ModusPonens>) os << "mp " << j.premise << ' ' << j.implication;
          else os << "nec " << j.premise << ' ' << j.role;
        },
        line.why);
    os << '\n';
  }
  return os.str();
}

Proof IdentityProof(const Concept& c) {
  const Concept cc = Concept::Subs(c, c);
  Substitution s1;  // a1 with D := C -> C
  s1.concepts = {{"C", c}, {"D", cc}};
  Substitution s2;  // a2 with D := C -> C, E := C
  s2.concepts = {{"C", c}, {"D", cc}, {"E", c}};
  Substitution s3;  // a1 with D := C
  s3.concepts = {{"C", c}, {"D", c}};
  Proof p;
  p.push_back({IplInstance(1, s1), IplStep{1, s1}});
  p.push_back({IplInstance(2, s2), IplStep{2, s2}});
  p.push_back({Concept::Subs(Concept::Subs(c, cc), cc), ModusPonens{1, 2}});
  p.push_back({IplInstance(1, s3), IplStep{1, s3}});
  p.push_back({cc, ModusPonens{4, 3}});
  return p;
}

}  // namespace ialc::hilbert
