// Concrete ASCII syntax.
//
//   concept  := disj ['->' concept]               (right associative)
//   disj     := conj {'|' conj}
//   conj     := unary {'&' unary}
//   unary    := 'not' unary | 'some' Role '.' unary | 'all' Role '.' unary | primary
//   primary  := Atom | 'top' | 'bot' | '(' concept ')'
//   formula  := nominal ':' body | Role '(' nominal ',' nominal ')' | concept
//   body     := nominal ':' body | '(' nominal ':' body ')' | concept
//   sequent  := [formula {';' formula}] '|-' formula
//
// Atoms and roles start with an uppercase letter, nominals with a lowercase
// letter or '_' (names starting with '_' are reserved for the prover).

#ifndef IALC_PARSER_H_
#define IALC_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ialc/syntax.h"

namespace ialc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

Concept ParseConcept(std::string_view text);
Formula ParseFormula(std::string_view text);
Sequent ParseSequent(std::string_view text);

// Sections `theory:`, `assume:`, `goal:` with one formula per line; `#`
// starts a comment. Exactly one goal formula is required.
Problem ParseProblem(std::string_view text);

bool IsNominalName(std::string_view name);
bool IsConceptName(std::string_view name);

}  // namespace ialc

#endif  // IALC_PARSER_H_
