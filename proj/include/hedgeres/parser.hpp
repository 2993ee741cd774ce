#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hedgeres/algebra.hpp"
#include "hedgeres/syntax.hpp"

namespace hedgeres {

struct FormulaStatement {
  Formula formula;
  TruthTerm reliability = TruthTerm::top();

  friend bool operator==(const FormulaStatement&, const FormulaStatement&) = default;
};

struct Statement {
  enum class Kind : std::uint8_t { Clause, Formula };
  Kind kind;
  std::size_t index;  // into Problem::clauses or Problem::formulas

  friend bool operator==(const Statement&, const Statement&) = default;
};

struct Problem {
  explicit Problem(Algebra a) : algebra(std::move(a)) {}

  Algebra algebra;
  bool inline_algebra = false;
  std::vector<AnnotatedClause> clauses;
  std::vector<FormulaStatement> formulas;
  std::vector<Statement> order;
  std::vector<std::string> warnings;
};

/// Parses a `.lfol` problem. An inline `algebra { ... }` block replaces the
/// given algebra. Clauses without `@` get reliability Top.
Problem parse_problem(std::string_view text, const Algebra& algebra = Algebra::standard());

/// Parses a `.hal` file, i.e. a single `algebra { ... }` block.
AlgebraConfig parse_algebra(std::string_view text);

/// Single-item parsers used for interpretation files and the CLI.
FOTerm parse_term(std::string_view text);
std::vector<FOTerm> parse_term_list(std::string_view text);
Atom parse_atom(std::string_view text);

/// Prints a problem so that parse_problem reproduces it.
std::string format_problem(const Problem& problem);

}  // namespace hedgeres
