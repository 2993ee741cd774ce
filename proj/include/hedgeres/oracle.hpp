#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hedgeres/algebra.hpp"
#include "hedgeres/syntax.hpp"

namespace hedgeres {

struct HerbrandLevel {
  std::size_t level = 0;
  std::vector<FOTerm> terms;  // sorted
};

/// H_0 is the constants of S (or {a} when there are none); H_{i+1} adds
/// every f(t1..tn) over H_i. Throws ResourceError past `max_terms`.
HerbrandLevel herbrand_universe(std::span<const AnnotatedClause> clauses, std::size_t level,
                                std::size_t max_terms = 100000);

/// Every predicate of S applied to every tuple over `universe`, sorted.
std::vector<Atom> herbrand_base(std::span<const AnnotatedClause> clauses, std::span<const FOTerm> universe);

/// All instances of c obtained by substituting universe members for its
/// variables, without duplicates.
std::vector<Clause> ground_instances(const Clause& c, std::span<const FOTerm> universe);

/// Ground instances of every clause of S, reliabilities carried over.
std::vector<AnnotatedClause> ground_clause_set(std::span<const AnnotatedClause> clauses,
                                               std::span<const FOTerm> universe);

/// Function tables map argument tuples to domain elements; constants are
/// functions with the empty tuple. A function without a table evaluates
/// syntactically, and the result must lie in the domain.
struct Interpretation {
  std::vector<FOTerm> domain;
  std::map<std::string, std::map<std::vector<FOTerm>, FOTerm>> functions;
  std::map<Atom, TruthTerm> atoms;
};

/// Reads `{"domain": [...], "functions": {...}, "atoms": {...}}`.
Interpretation parse_interpretation(std::string_view json, const Algebra& algebra);
std::string format_interpretation(const Interpretation& interpretation, const Algebra& algebra);

/// Truth value of the literal A^annotation when I(A) = atom_value.
TruthTerm eval_literal(const TruthTerm& atom_value, const TruthTerm& annotation, const Algebra& algebra);

FOTerm eval_term(const FOTerm& t, const Interpretation& interpretation);
/// Free variables are read universally over the domain.
TruthTerm eval_formula(const Formula& f, const Interpretation& interpretation, const Algebra& algebra);
TruthTerm eval_formula(const Clause& c, const Interpretation& interpretation, const Algebra& algebra);

enum class SatMode : std::uint8_t { Strict, Weak };

/// Strict: value > W. Weak: value >= W.
bool accepts(const TruthTerm& value, SatMode mode, const Algebra& algebra);

struct OracleOptions {
  std::size_t truth_depth = 2;
  SatMode mode = SatMode::Strict;
  std::size_t max_nodes = 10'000'000;
};

struct SatResult {
  bool satisfiable = false;
  std::optional<Interpretation> witness;
  std::size_t nodes = 0;
};

/// Backtracking search over atom valuations drawn from
/// enumerate_terms(truth_depth). Atoms are tried in order of first
/// appearance and values in ascending order, so the witness is the first
/// model in that enumeration. Clause reliabilities play no part.
/// Throws UsageError on non-ground input and ResourceError at the node cap.
SatResult check_sat(std::span<const AnnotatedClause> clauses, const OracleOptions& options, const Algebra& algebra);

/// Every sampled valuation that strictly satisfies the premises strictly
/// satisfies the conclusion.
bool entails(std::span<const AnnotatedClause> premises, const Clause& conclusion, std::size_t truth_depth,
             const Algebra& algebra, std::size_t max_nodes = 10'000'000);

/// Exhaustive search for a model over the domain {e1..en}: every constant,
/// function and predicate of the inputs is interpreted in all possible ways
/// (predicates into enumerate_terms(truth_depth)). Clauses are read with
/// their variables universal. The cap counts complete interpretations.
SatResult check_sat_over_domain(std::span<const Formula> formulas, std::span<const Clause> clauses,
                                std::size_t domain_size, const OracleOptions& options, const Algebra& algebra);

}  // namespace hedgeres
