#include "ialc/parser.h"

#include <cctype>
#include <sstream>

namespace ialc {

namespace {

std::string JoinExpected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string Describe(int line, int column, const std::vector<std::string>& expected, const std::string& found) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": expected " << JoinExpected(expected) << ", found " << found;
  return os.str();
}

enum class Tok {
  kUpper,
  kLower,
  kTop,
  kBot,
  kNot,
  kSome,
  kAll,
  kLParen,
  kRParen,
  kDot,
  kComma,
  kColon,
  kSemi,
  kAnd,
  kOr,
  kArrow,
  kTurnstile,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string Quote(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool IsIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> Lex(std::string_view text, int first_line) {
  std::vector<Token> out;
  int line = first_line;
  int column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, column});
    i += len;
    column += static_cast<int>(len);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    if (IsIdentStart(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && IsIdentChar(text[j])) ++j;
      const std::string_view word = text.substr(i, j - i);
      Tok kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::kUpper : Tok::kLower;
      if (word == "top") kind = Tok::kTop;
      else if (word == "bot") kind = Tok::kBot;
      else if (word == "not") kind = Tok::kNot;
      else if (word == "some") kind = Tok::kSome;
      else if (word == "all") kind = Tok::kAll;
      push(kind, j - i);
      continue;
    }
    switch (c) {
      case '(': push(Tok::kLParen, 1); continue;
      case ')': push(Tok::kRParen, 1); continue;
      case '.': push(Tok::kDot, 1); continue;
      case ',': push(Tok::kComma, 1); continue;
      case ':': push(Tok::kColon, 1); continue;
      case ';': push(Tok::kSemi, 1); continue;
      case '&': push(Tok::kAnd, 1); continue;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') push(Tok::kTurnstile, 2);
        else push(Tok::kOr, 1);
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::kArrow, 2);
          continue;
        }
        break;
      default:
        break;
    }
    const std::string found = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                  ? "non-printable byte"
                                  : "'" + std::string(1, c) + "'";
    throw ParseError(line, column, {"a name, operator, or parenthesis"}, found);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, int first_line) : tokens_(Lex(text, first_line)) {}

  Concept WholeConcept() {
    Concept c = ParseConcept();
    Expect(Tok::kEnd, {"an operator", "end of input"});
    return c;
  }

  Formula WholeFormula() {
    Formula f = ParseFormula();
    Expect(Tok::kEnd, {"an operator", "end of input"});
    return f;
  }

  Sequent WholeSequent() {
    FormulaSet ante;
    if (Peek().kind != Tok::kTurnstile) {
      ante.insert(ParseFormula());
      while (Peek().kind == Tok::kSemi) {
        Next();
        ante.insert(ParseFormula());
      }
    }
    Expect(Tok::kTurnstile, {"';'", "'|-'", "an operator"});
    if (Peek().kind == Tok::kEnd) Fail({"a succedent formula"});
    Formula succ = ParseFormula();
    Expect(Tok::kEnd, {"an operator", "end of input"});
    return Sequent(std::move(ante), std::move(succ));
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  Token Next() {
    Token t = Peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void Fail(std::vector<std::string> expected) const {
    const Token& t = Peek();
    throw ParseError(t.line, t.column, std::move(expected), Quote(t));
  }
  Token Expect(Tok kind, std::vector<std::string> expected) {
    if (Peek().kind != kind) Fail(std::move(expected));
    return Next();
  }

  // '(' nominal ':' opens a parenthesized nominal assertion rather than a concept.
  bool AtParenthesizedAssertion() const {
    return Peek().kind == Tok::kLParen && Peek(1).kind == Tok::kLower && Peek(2).kind == Tok::kColon;
  }

  Formula ParseFormula() {
    if (Peek().kind == Tok::kLower) return ParseAssertion();
    if (Peek().kind == Tok::kUpper && Peek(1).kind == Tok::kLParen) {
      std::string role = Next().text;
      Next();
      std::string subject = Expect(Tok::kLower, {"a nominal"}).text;
      Expect(Tok::kComma, {"','"});
      std::string object = Expect(Tok::kLower, {"a nominal"}).text;
      Expect(Tok::kRParen, {"')'"});
      return Formula::Role(std::move(subject), std::move(role), std::move(object));
    }
    if (AtParenthesizedAssertion()) {
      Next();
      Formula f = ParseAssertion();
      Expect(Tok::kRParen, {"')'"});
      return f;
    }
    return Formula(ParseConcept());
  }

  Formula ParseAssertion() {
    std::string nominal = Expect(Tok::kLower, {"a nominal"}).text;
    Expect(Tok::kColon, {"':'"});
    return Formula::At(std::move(nominal), ParseBody());
  }

  Formula ParseBody() {
    if (Peek().kind == Tok::kLower) return ParseAssertion();
    if (AtParenthesizedAssertion()) {
      Next();
      Formula f = ParseBody();
      Expect(Tok::kRParen, {"')'"});
      return f;
    }
    return Formula(ParseConcept());
  }

  Concept ParseConcept() {
    Concept left = ParseDisjunction();
    if (Peek().kind == Tok::kArrow) {
      Next();
      return Concept::Subs(std::move(left), ParseConcept());
    }
    return left;
  }

  Concept ParseDisjunction() {
    Concept c = ParseConjunction();
    while (Peek().kind == Tok::kOr) {
      Next();
      c = Concept::Or(std::move(c), ParseConjunction());
    }
    return c;
  }

  Concept ParseConjunction() {
    Concept c = ParseUnary();
    while (Peek().kind == Tok::kAnd) {
      Next();
      c = Concept::And(std::move(c), ParseUnary());
    }
    return c;
  }

  Concept ParseUnary() {
    switch (Peek().kind) {
      case Tok::kNot:
        Next();
        return Concept::Not(ParseUnary());
      case Tok::kSome:
      case Tok::kAll: {
        const bool exists = Next().kind == Tok::kSome;
        std::string role = Expect(Tok::kUpper, {"a role name"}).text;
        Expect(Tok::kDot, {"'.'"});
        Concept body = ParseUnary();
        return exists ? Concept::Exists(std::move(role), std::move(body))
                      : Concept::Forall(std::move(role), std::move(body));
      }
      default:
        return ParsePrimary();
    }
  }

  Concept ParsePrimary() {
    switch (Peek().kind) {
      case Tok::kUpper:
        return Concept::Atom(Next().text);
      case Tok::kTop:
        Next();
        return Concept::Top();
      case Tok::kBot:
        Next();
        return Concept::Bot();
      case Tok::kLParen: {
        Next();
        Concept c = ParseConcept();
        Expect(Tok::kRParen, {"')'", "an operator"});
        return c;
      }
      default:
        Fail({"an atom", "'top'", "'bot'", "'not'", "'some'", "'all'", "'('"});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool StartsSection(std::string_view line, std::string_view header) {
  return line == header;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found)
    : std::runtime_error(Describe(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Concept ParseConcept(std::string_view text) { return Parser(text, 1).WholeConcept(); }
Formula ParseFormula(std::string_view text) { return Parser(text, 1).WholeFormula(); }
Sequent ParseSequent(std::string_view text) { return Parser(text, 1).WholeSequent(); }

Problem ParseProblem(std::string_view text) {
  enum class Section { kNone, kTheory, kAssume, kGoal };
  Section section = Section::kNone;
  std::vector<Formula> theory;
  std::vector<Formula> assumptions;
  std::vector<Formula> goals;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = Trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (StartsSection(line, "theory:")) {
      section = Section::kTheory;
    } else if (StartsSection(line, "assume:")) {
      section = Section::kAssume;
    } else if (StartsSection(line, "goal:")) {
      section = Section::kGoal;
    } else {
      const int column = static_cast<int>(line.data() - raw.data()) + 1;
      if (section == Section::kNone) throw ParseError(line_no, column, {"'theory:'", "'assume:'", "'goal:'"}, "formula");
      // Re-lex with the right line number; columns are offset by leading blanks.
      Formula f = [&] {
        try {
          return Parser(line, line_no).WholeFormula();
        } catch (const ParseError& e) {
          throw ParseError(e.line(), e.column() + column - 1, e.expected(), e.found());
        }
      }();
      switch (section) {
        case Section::kTheory:
          theory.push_back(std::move(f));
          break;
        case Section::kAssume:
          assumptions.push_back(std::move(f));
          break;
        case Section::kGoal:
          if (!goals.empty()) throw ParseError(line_no, column, {"end of goal section"}, "second goal formula");
          goals.push_back(std::move(f));
          break;
        case Section::kNone:
          break;
      }
    }
    if (end == text.size()) break;
  }
  if (goals.empty()) throw ParseError(line_no, 1, {"a 'goal:' section with one formula"}, "end of input");
  return Problem{std::move(theory), std::move(assumptions), std::move(goals.front())};
}

bool IsNominalName(std::string_view name) {
  if (name.empty() || !(std::islower(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!IsIdentChar(c)) return false;
  return name != "top" && name != "bot" && name != "not" && name != "some" && name != "all";
}

bool IsConceptName(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!IsIdentChar(c)) return false;
  return true;
}

}  // namespace ialc
