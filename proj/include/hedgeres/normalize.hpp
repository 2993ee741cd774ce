#pragma once

#include <set>
#include <string>
#include <vector>

#include "hedgeres/algebra.hpp"
#include "hedgeres/parser.hpp"
#include "hedgeres/syntax.hpp"

namespace hedgeres {

/// Supply of fresh Skolem symbols `sk1, sk2, ...` for one clausification
/// pass. Names already in `reserved` are skipped.
class SkolemNames {
 public:
  SkolemNames() = default;
  explicit SkolemNames(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

  std::string next();

 private:
  std::set<std::string> reserved_;
  std::size_t counter_ = 0;
};

/// Pushes negation onto literals (¬A:α becomes A:¬α) and rewrites -> and
/// <-> into ~, &, |.
Formula to_nnf(const Formula& f, const Algebra& algebra);

/// Drops universals and replaces each existential by a Skolem term over the
/// enclosing universal variables (free variables count as universal).
/// Bound variables are renamed apart first.
Formula skolemize(const Formula& nnf, SkolemNames& names);

/// Distributes | over & in a quantifier-free NNF formula.
std::vector<Clause> to_cnf(const Formula& f);

std::vector<AnnotatedClause> clausify(const Formula& f, const TruthTerm& reliability, const Algebra& algebra,
                                      SkolemNames& names);
std::vector<AnnotatedClause> clausify(const Formula& f, const TruthTerm& reliability, const Algebra& algebra);

/// Input clauses followed by the clausified formulas, in statement order.
std::vector<AnnotatedClause> clausify_problem(const Problem& problem);

/// Function and constant symbols occurring anywhere in f.
void collect_function_symbols(const Formula& f, std::set<std::string>& out);

}  // namespace hedgeres
