#include "hedgeres/normalize.hpp"

#include <map>

#include "hedgeres/errors.hpp"
#include "hedgeres/unify.hpp"

namespace hedgeres {

namespace {

using Kind = Formula::Kind;

Formula nnf(const Formula& f, bool negated, const Algebra& algebra) {
  switch (f.kind) {
    case Kind::Lit:
      if (!negated) return f;
      return Formula::lit({f.literal.atom, algebra.negate(f.literal.annotation)});
    case Kind::Not:
      return nnf(f.operands[0], !negated, algebra);
    case Kind::And:
    case Kind::Or: {
      const bool conj = (f.kind == Kind::And) != negated;
      return Formula::binary(conj ? Kind::And : Kind::Or, nnf(f.operands[0], negated, algebra),
                             nnf(f.operands[1], negated, algebra));
    }
    case Kind::Implies:
      return nnf(Formula::binary(Kind::Or, Formula::negation(f.operands[0]), f.operands[1]), negated, algebra);
    case Kind::Iff: {
      Formula forward = Formula::binary(Kind::Or, Formula::negation(f.operands[0]), f.operands[1]);
      Formula backward = Formula::binary(Kind::Or, Formula::negation(f.operands[1]), f.operands[0]);
      return nnf(Formula::binary(Kind::And, std::move(forward), std::move(backward)), negated, algebra);
    }
    case Kind::ForAll:
    case Kind::Exists: {
      const bool universal = (f.kind == Kind::ForAll) != negated;
      return Formula::quantified(universal ? Kind::ForAll : Kind::Exists, f.variable,
                                 nnf(f.operands[0], negated, algebra));
    }
  }
  return f;
}

void collect_all_vars(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Kind::Lit) {
    for (const auto& t : f.literal.atom.args) collect_vars(t, out);
    return;
  }
  if (f.is_quantifier()) out.insert(f.variable);
  for (const auto& op : f.operands) collect_all_vars(op, out);
}

void collect_term_symbols(const FOTerm& t, std::set<std::string>& out) {
  if (t.is_variable()) return;
  out.insert(t.name);
  for (const auto& a : t.args) collect_term_symbols(a, out);
}

class Skolemizer {
 public:
  Skolemizer(const Formula& f, SkolemNames& names) : names_(names), free_at_top_(free_vars(f)) {
    collect_all_vars(f, taken_);
  }

  Formula run(const Formula& f) {
    std::vector<std::string> universals(free_at_top_.begin(), free_at_top_.end());
    return walk(f, universals, {});
  }

 private:
  Formula walk(const Formula& f, std::vector<std::string>& universals, const Substitution& scope) {
    switch (f.kind) {
      case Kind::Lit:
        return Formula::lit(scope.apply(f.literal));
      case Kind::And:
      case Kind::Or:
      {
        Formula left = walk(f.operands[0], universals, scope);
        Formula right = walk(f.operands[1], universals, scope);
        return Formula::binary(f.kind, std::move(left), std::move(right));
      }
      case Kind::ForAll: {
        const std::string name = fresh_variable(f.variable);
        Substitution inner = scope;
        inner.bind(f.variable, FOTerm::variable(name));
        universals.push_back(name);
        Formula body = walk(f.operands[0], universals, inner);
        universals.pop_back();
        return body;
      }
      case Kind::Exists: {
        std::vector<FOTerm> args;
        for (const auto& u : universals) args.push_back(FOTerm::variable(u));
        Substitution inner = scope;
        inner.bind(f.variable, FOTerm::function(names_.next(), std::move(args)));
        return walk(f.operands[0], universals, inner);
      }
      default:
        throw UsageError("skolemize expects a formula in negation normal form");
    }
  }

  // The first binder of a name keeps it; later ones get a suffix so that
  // dropping the quantifiers cannot merge distinct variables.
  std::string fresh_variable(const std::string& base) {
    if (!bound_.contains(base) && !free_at_top_.contains(base)) {
      bound_.insert(base);
      return base;
    }
    for (std::size_t i = 1;; ++i) {
      std::string candidate = base + "_" + std::to_string(i);
      if (!taken_.contains(candidate)) {
        taken_.insert(candidate);
        bound_.insert(candidate);
        return candidate;
      }
    }
  }

 private:
  SkolemNames& names_;
  VarSet free_at_top_;
  std::set<std::string> taken_;
  std::set<std::string> bound_;
};

}  // namespace

std::string SkolemNames::next() {
  for (;;) {
    std::string name = "sk" + std::to_string(++counter_);
    if (!reserved_.contains(name)) return name;
  }
}

void collect_function_symbols(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Kind::Lit) {
    for (const auto& t : f.literal.atom.args) collect_term_symbols(t, out);
    return;
  }
  for (const auto& op : f.operands) collect_function_symbols(op, out);
}

Formula to_nnf(const Formula& f, const Algebra& algebra) { return nnf(f, false, algebra); }

Formula skolemize(const Formula& f, SkolemNames& names) {
  return Skolemizer(f, names).run(f);
}

std::vector<Clause> to_cnf(const Formula& f) {
  std::vector<Clause> out;
  auto add = [&out](Clause c) {
    for (const auto& existing : out) {
      if (same_literals(existing, c)) return;
    }
    out.push_back(std::move(c));
  };
  switch (f.kind) {
    case Kind::Lit:
      out.push_back(Clause({f.literal}));
      return out;
    case Kind::And:
      for (const auto& side : f.operands) {
        for (auto& c : to_cnf(side)) add(std::move(c));
      }
      return out;
    case Kind::Or: {
      const auto left = to_cnf(f.operands[0]);
      const auto right = to_cnf(f.operands[1]);
      for (const auto& l : left) {
        for (const auto& r : right) {
          std::vector<Literal> lits = l.literals();
          lits.insert(lits.end(), r.literals().begin(), r.literals().end());
          add(Clause(std::move(lits)));
        }
      }
      return out;
    }
    default:
      throw UsageError("to_cnf expects a quantifier-free formula in negation normal form");
  }
}

std::vector<AnnotatedClause> clausify(const Formula& f, const TruthTerm& reliability, const Algebra& algebra,
                                      SkolemNames& names) {
  std::vector<AnnotatedClause> out;
  for (auto& c : to_cnf(skolemize(to_nnf(f, algebra), names))) out.push_back({std::move(c), reliability});
  return out;
}

std::vector<AnnotatedClause> clausify(const Formula& f, const TruthTerm& reliability, const Algebra& algebra) {
  std::set<std::string> symbols;
  collect_function_symbols(f, symbols);
  SkolemNames names(std::move(symbols));
  return clausify(f, reliability, algebra, names);
}

std::vector<AnnotatedClause> clausify_problem(const Problem& problem) {
  std::set<std::string> symbols;
  for (const auto& c : problem.clauses) {
    for (const auto& l : c.clause.literals()) {
      for (const auto& t : l.atom.args) collect_term_symbols(t, symbols);
    }
  }
  for (const auto& s : problem.formulas) collect_function_symbols(s.formula, symbols);
  SkolemNames names(std::move(symbols));

  std::vector<AnnotatedClause> out;
  for (const auto& s : problem.order) {
    if (s.kind == Statement::Kind::Clause) {
      out.push_back(problem.clauses[s.index]);
    } else {
      const auto& f = problem.formulas[s.index];
      for (auto& c : clausify(f.formula, f.reliability, problem.algebra, names)) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace hedgeres
