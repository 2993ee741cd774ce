#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hedgeres/algebra.hpp"
#include "hedgeres/syntax.hpp"
#include "hedgeres/unify.hpp"

namespace hedgeres {

/// α1 ∧ α2 ∧ ¬(a ∧ b) ∧ (a ∨ b), or nullopt when the rule's side conditions
/// a ∧ b < W and a ∨ b ≥ W fail.
std::optional<TruthTerm> combine_reliability(const TruthTerm& rel1, const TruthTerm& rel2, const TruthTerm& a,
                                             const TruthTerm& b, const Algebra& algebra);

struct Inference {
  AnnotatedClause clause;
  Substitution unifier;
};

/// Binary resolution of c1[i] against c2[j]. The premises must not share
/// variables. Returns nullopt when the atoms do not unify or the
/// annotations are not contradictory enough.
std::optional<Inference> resolve(const AnnotatedClause& c1, const AnnotatedClause& c2, std::size_t i,
                                 std::size_t j, const Algebra& algebra);

/// Unifies the chosen literals (at least two, all with the same annotation)
/// and applies the unifier to the whole clause. Reliability is kept.
std::optional<Inference> factor(const AnnotatedClause& c, std::span<const std::size_t> subset);

/// Equal up to a bijective renaming of variables. Annotations must match;
/// reliabilities are ignored.
bool is_variant(const Clause& c1, const Clause& c2);
bool is_variant(const AnnotatedClause& c1, const AnnotatedClause& c2);

/// Meet of all reliabilities; throws UsageError on an empty set.
TruthTerm set_reliability(std::span<const AnnotatedClause> clauses, const Algebra& algebra);

/// Hands out variable names of the form `base_N` that avoid a reserved set.
class VariableNamer {
 public:
  VariableNamer() = default;
  explicit VariableNamer(VarSet reserved) : reserved_(std::move(reserved)) {}

  std::string fresh(const std::string& base);

 private:
  VarSet reserved_;
  std::size_t counter_ = 0;
};

/// Renames the variables of c that also occur in `avoid`. The renaming used
/// is returned alongside.
std::pair<AnnotatedClause, Substitution> rename_apart(const AnnotatedClause& c, const VarSet& avoid,
                                                      VariableNamer& namer);

enum class Rule : std::uint8_t { Input, Factor, Resolve };

const char* rule_name(Rule rule);

struct ProofNode {
  std::size_t id = 0;
  AnnotatedClause clause;
  Rule rule = Rule::Input;
  std::vector<std::size_t> premises;
  Substitution substitution;
  // Renaming applied to the second premise before resolving.
  Substitution renaming;
  std::optional<std::pair<std::size_t, std::size_t>> resolved;
  std::vector<std::size_t> factored;
  std::size_t depth = 0;
};

/// Nodes sorted by id; premises always have smaller ids than conclusions.
struct ProofTree {
  std::vector<ProofNode> nodes;
  std::size_t root = 0;

  const ProofNode& node(std::size_t id) const;
  const ProofNode& root_node() const { return node(root); }
  const TruthTerm& reliability() const { return root_node().clause.reliability; }
};

enum class Strategy : std::uint8_t { First, Best };

struct SearchBudget {
  std::size_t max_clauses = 10000;  // derived clauses retained
  std::size_t max_depth = 64;       // inference depth of any retained clause
  std::size_t max_atom_size = 256;  // symbols in any atom of a retained clause
  Strategy strategy = Strategy::First;
};

enum class Outcome : std::uint8_t { Refuted, Saturated, BudgetExhausted };

struct SaturationResult {
  Outcome outcome = Outcome::Saturated;
  std::optional<ProofTree> proof;
  std::size_t derived = 0;
  std::size_t given = 0;
  std::vector<std::string> warnings;
};

/// Given-clause saturation under binary resolution and factoring with
/// variant deletion. Input clauses are renamed apart first. First stops at
/// the first empty clause; Best keeps searching within budget for the
/// refutation of highest reliability.
SaturationResult saturate(std::vector<AnnotatedClause> input, const SearchBudget& budget, const Algebra& algebra);

struct ReplayStep {
  Rule rule = Rule::Resolve;
  std::vector<std::size_t> premises;  // node ids
  std::vector<std::size_t> literals;  // Resolve: {i, j}; Factor: the subset
};

/// Runs exactly the given inferences. Inputs get ids 0..n-1 and step k gets
/// id n+k. Throws ReplayError naming the step when one does not apply.
ProofTree replay(const std::vector<AnnotatedClause>& inputs, std::span<const ReplayStep> script,
                 const Algebra& algebra);

}  // namespace hedgeres
