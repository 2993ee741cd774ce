#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "hedgeres/algebra.hpp"

namespace hedgeres {

/// First-order term. Constants are functions of arity zero.
struct FOTerm {
  enum class Kind : std::uint8_t { Variable, Function };

  Kind kind = Kind::Function;
  std::string name;
  std::vector<FOTerm> args;

  static FOTerm variable(std::string name) { return {Kind::Variable, std::move(name), {}}; }
  static FOTerm constant(std::string name) { return {Kind::Function, std::move(name), {}}; }
  static FOTerm function(std::string name, std::vector<FOTerm> args) {
    return {Kind::Function, std::move(name), std::move(args)};
  }

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_constant() const { return kind == Kind::Function && args.empty(); }
  bool is_ground() const;

  friend bool operator==(const FOTerm&, const FOTerm&) = default;
  friend std::strong_ordering operator<=>(const FOTerm& a, const FOTerm& b);
};

struct Atom {
  std::string predicate;
  std::vector<FOTerm> args;

  bool is_ground() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

/// A^α: "A is α".
struct Literal {
  Atom atom;
  TruthTerm annotation;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A disjunction of literals; the empty clause is □. Identical literals are
/// collapsed on construction, keeping first occurrences in order.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }
  bool is_ground() const;

  // Order-sensitive; use same_literals for set equality.
  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

bool same_literals(const Clause& a, const Clause& b);

/// (C, α): a clause with its reliability.
struct AnnotatedClause {
  Clause clause;
  TruthTerm reliability = TruthTerm::top();

  friend bool operator==(const AnnotatedClause&, const AnnotatedClause&) = default;
};

struct Formula {
  enum class Kind : std::uint8_t { Lit, Not, And, Or, Implies, Iff, ForAll, Exists };

  Kind kind = Kind::Lit;
  Literal literal;                // Lit
  std::string variable;           // ForAll, Exists
  std::vector<Formula> operands;  // one for Not and quantifiers, two for binaries

  static Formula lit(Literal l);
  static Formula negation(Formula f);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  static Formula quantified(Kind kind, std::string variable, Formula body);

  bool is_binary() const;
  bool is_quantifier() const { return kind == Kind::ForAll || kind == Kind::Exists; }

  friend bool operator==(const Formula&, const Formula&) = default;
};

using VarSet = std::set<std::string>;

void collect_vars(const FOTerm& t, VarSet& out);
VarSet free_vars(const FOTerm& t);
VarSet free_vars(const Atom& a);
VarSet free_vars(const Literal& l);
VarSet free_vars(const Clause& c);
VarSet free_vars(const Formula& f);

}  // namespace hedgeres
