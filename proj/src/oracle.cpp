#include "hedgeres/oracle.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "hedgeres/errors.hpp"
#include "hedgeres/parser.hpp"
#include "hedgeres/printer.hpp"
#include "hedgeres/unify.hpp"

namespace hedgeres {

namespace {

using Arities = std::map<std::string, std::size_t>;

void term_symbols(const FOTerm& t, Arities& functions) {
  if (t.is_variable()) return;
  functions.emplace(t.name, t.args.size());
  for (const auto& a : t.args) term_symbols(a, functions);
}

void atom_symbols(const Atom& a, Arities& functions, Arities& predicates) {
  predicates.emplace(a.predicate, a.args.size());
  for (const auto& t : a.args) term_symbols(t, functions);
}

void formula_symbols(const Formula& f, Arities& functions, Arities& predicates) {
  if (f.kind == Formula::Kind::Lit) {
    atom_symbols(f.literal.atom, functions, predicates);
    return;
  }
  for (const auto& op : f.operands) formula_symbols(op, functions, predicates);
}

void clause_symbols(const Clause& c, Arities& functions, Arities& predicates) {
  for (const auto& l : c.literals()) atom_symbols(l.atom, functions, predicates);
}

// Calls visit(tuple) for every tuple in universe^arity, in odometer order.
template <typename Visit>
void for_each_tuple(std::span<const FOTerm> universe, std::size_t arity, Visit&& visit) {
  if (arity > 0 && universe.empty()) return;
  std::vector<std::size_t> index(arity, 0);
  std::vector<FOTerm> tuple(arity, arity > 0 ? universe[0] : FOTerm{});
  for (;;) {
    visit(tuple);
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++index[k] < universe.size()) {
        tuple[k] = universe[index[k]];
        break;
      }
      index[k] = 0;
      tuple[k] = universe[0];
      if (k == 0) return;
    }
    if (arity == 0) return;
  }
}

using Env = std::map<std::string, FOTerm>;

FOTerm eval_term_env(const FOTerm& t, const Interpretation& interpretation, const Env& env) {
  if (t.is_variable()) {
    auto it = env.find(t.name);
    if (it == env.end()) throw EvaluationError("unbound variable ?" + t.name);
    return it->second;
  }
  std::vector<FOTerm> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(eval_term_env(a, interpretation, env));
  if (auto table = interpretation.functions.find(t.name); table != interpretation.functions.end()) {
    auto it = table->second.find(args);
    if (it == table->second.end()) {
      throw EvaluationError("function table of " + t.name + " has no entry for " +
                            to_string(FOTerm::function(t.name, args)));
    }
    return it->second;
  }
  FOTerm value = FOTerm::function(t.name, std::move(args));
  if (std::find(interpretation.domain.begin(), interpretation.domain.end(), value) == interpretation.domain.end()) {
    throw EvaluationError("term " + to_string(value) + " is not in the domain");
  }
  return value;
}

TruthTerm eval_atom_env(const Atom& a, const Interpretation& interpretation, const Env& env) {
  Atom ground;
  ground.predicate = a.predicate;
  ground.args.reserve(a.args.size());
  for (const auto& t : a.args) ground.args.push_back(eval_term_env(t, interpretation, env));
  auto it = interpretation.atoms.find(ground);
  if (it == interpretation.atoms.end()) throw EvaluationError("no truth value for atom " + to_string(ground));
  return it->second;
}

TruthTerm eval_formula_env(const Formula& f, const Interpretation& interpretation, const Algebra& algebra,
                           Env& env) {
  using Kind = Formula::Kind;
  switch (f.kind) {
    case Kind::Lit:
      return eval_literal(eval_atom_env(f.literal.atom, interpretation, env), f.literal.annotation, algebra);
    case Kind::Not:
      return algebra.negate(eval_formula_env(f.operands[0], interpretation, algebra, env));
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff: {
      const TruthTerm x = eval_formula_env(f.operands[0], interpretation, algebra, env);
      const TruthTerm y = eval_formula_env(f.operands[1], interpretation, algebra, env);
      if (f.kind == Kind::And) return algebra.meet(x, y);
      if (f.kind == Kind::Or) return algebra.join(x, y);
      if (f.kind == Kind::Implies) return algebra.implies(x, y);
      return algebra.iff(x, y);
    }
    case Kind::ForAll:
    case Kind::Exists: {
      const bool universal = f.kind == Kind::ForAll;
      TruthTerm acc = universal ? TruthTerm::top() : TruthTerm::bottom();
      std::optional<FOTerm> saved;
      if (auto it = env.find(f.variable); it != env.end()) saved = it->second;
      for (const auto& d : interpretation.domain) {
        env.insert_or_assign(f.variable, d);
        const TruthTerm v = eval_formula_env(f.operands[0], interpretation, algebra, env);
        acc = universal ? algebra.meet(acc, v) : algebra.join(acc, v);
      }
      if (saved) {
        env.insert_or_assign(f.variable, *saved);
      } else {
        env.erase(f.variable);
      }
      return acc;
    }
  }
  return TruthTerm::bottom();
}

TruthTerm eval_clause_env(const Clause& c, const Interpretation& interpretation, const Algebra& algebra,
                          const Env& env) {
  TruthTerm acc = TruthTerm::bottom();
  for (const auto& l : c.literals()) {
    acc = algebra.join(acc, eval_literal(eval_atom_env(l.atom, interpretation, env), l.annotation, algebra));
  }
  return acc;
}

ParseError json_error(const std::string& message) { return ParseError(message, 1, 1); }

}  // namespace

HerbrandLevel herbrand_universe(std::span<const AnnotatedClause> clauses, std::size_t level, std::size_t max_terms) {
  Arities functions;
  Arities predicates;
  for (const auto& c : clauses) clause_symbols(c.clause, functions, predicates);
  std::set<FOTerm> terms;
  for (const auto& [name, arity] : functions) {
    if (arity == 0) terms.insert(FOTerm::constant(name));
  }
  if (terms.empty()) terms.insert(FOTerm::constant("a"));
  for (std::size_t i = 0; i < level; ++i) {
    const std::vector<FOTerm> current(terms.begin(), terms.end());
    for (const auto& [name, arity] : functions) {
      if (arity == 0) continue;
      for_each_tuple(current, arity, [&](const std::vector<FOTerm>& args) {
        terms.insert(FOTerm::function(name, args));
        if (terms.size() > max_terms) {
          throw ResourceError("Herbrand universe exceeds " + std::to_string(max_terms) + " terms");
        }
      });
    }
  }
  return {level, std::vector<FOTerm>(terms.begin(), terms.end())};
}

std::vector<Atom> herbrand_base(std::span<const AnnotatedClause> clauses, std::span<const FOTerm> universe) {
  Arities functions;
  Arities predicates;
  for (const auto& c : clauses) clause_symbols(c.clause, functions, predicates);
  std::vector<Atom> out;
  for (const auto& [name, arity] : predicates) {
    for_each_tuple(universe, arity, [&](const std::vector<FOTerm>& args) { out.push_back({name, args}); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clause> ground_instances(const Clause& c, std::span<const FOTerm> universe) {
  const VarSet vars = free_vars(c);
  const std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<Clause> out;
  for_each_tuple(universe, names.size(), [&](const std::vector<FOTerm>& values) {
    Substitution sigma;
    for (std::size_t i = 0; i < names.size(); ++i) sigma.bind(names[i], values[i]);
    Clause g = sigma.apply(c);
    for (const auto& existing : out) {
      if (existing == g) return;
    }
    out.push_back(std::move(g));
  });
  return out;
}

std::vector<AnnotatedClause> ground_clause_set(std::span<const AnnotatedClause> clauses,
                                               std::span<const FOTerm> universe) {
  std::vector<AnnotatedClause> out;
  for (const auto& c : clauses) {
    for (auto& g : ground_instances(c.clause, universe)) out.push_back({std::move(g), c.reliability});
  }
  return out;
}

Interpretation parse_interpretation(std::string_view text, const Algebra& algebra) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  if (!doc.is_object()) throw json_error("interpretation must be a JSON object");
  Interpretation out;
  auto in_domain = [&out](const FOTerm& t) {
    return std::find(out.domain.begin(), out.domain.end(), t) != out.domain.end();
  };
  try {
    if (doc.contains("domain")) {
      for (const auto& item : doc.at("domain")) {
        FOTerm t = parse_term(item.get<std::string>());
        if (!t.is_ground()) throw json_error("domain element " + to_string(t) + " is not ground");
        if (!in_domain(t)) out.domain.push_back(std::move(t));
      }
    }
    if (out.domain.empty()) throw json_error("interpretation domain is empty");
    if (doc.contains("functions")) {
      for (const auto& [name, table] : doc.at("functions").items()) {
        auto& entries = out.functions[name];
        for (const auto& [args, value] : table.items()) {
          FOTerm v = parse_term(value.get<std::string>());
          if (!in_domain(v)) throw json_error("value " + to_string(v) + " of " + name + " is not in the domain");
          entries.insert_or_assign(parse_term_list(args), std::move(v));
        }
      }
    }
    if (doc.contains("atoms")) {
      for (const auto& [key, value] : doc.at("atoms").items()) {
        Atom a = parse_atom(key);
        for (const auto& t : a.args) {
          if (!in_domain(t)) throw json_error("argument " + to_string(t) + " of " + key + " is not in the domain");
        }
        out.atoms.insert_or_assign(std::move(a), algebra.parse(value.get<std::string>()));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw json_error(e.what());
  }
  return out;
}

std::string format_interpretation(const Interpretation& interpretation, const Algebra& algebra) {
  nlohmann::ordered_json doc;
  doc["domain"] = nlohmann::ordered_json::array();
  for (const auto& d : interpretation.domain) doc["domain"].push_back(to_string(d));
  doc["functions"] = nlohmann::ordered_json::object();
  for (const auto& [name, table] : interpretation.functions) {
    auto& entries = doc["functions"][name];
    entries = nlohmann::ordered_json::object();
    for (const auto& [args, value] : table) {
      std::string key;
      for (std::size_t i = 0; i < args.size(); ++i) key += (i ? ", " : "") + to_string(args[i]);
      entries[key] = to_string(value);
    }
  }
  doc["atoms"] = nlohmann::ordered_json::object();
  for (const auto& [atom, value] : interpretation.atoms) doc["atoms"][to_string(atom)] = algebra.format(value);
  return doc.dump(2);
}

TruthTerm eval_literal(const TruthTerm& atom_value, const TruthTerm& annotation, const Algebra& algebra) {
  const bool high1 = algebra.above_middle(atom_value);
  const bool high2 = algebra.above_middle(annotation);
  if (high1 && high2) return algebra.meet(atom_value, annotation);
  if (!high1 && !high2) return algebra.negate(algebra.join(atom_value, annotation));
  if (high1) return algebra.join(algebra.negate(atom_value), annotation);
  return algebra.join(atom_value, algebra.negate(annotation));
}

FOTerm eval_term(const FOTerm& t, const Interpretation& interpretation) {
  return eval_term_env(t, interpretation, {});
}

TruthTerm eval_formula(const Formula& f, const Interpretation& interpretation, const Algebra& algebra) {
  Formula closed = f;
  const VarSet vars = free_vars(f);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    closed = Formula::quantified(Formula::Kind::ForAll, *it, std::move(closed));
  }
  Env env;
  return eval_formula_env(closed, interpretation, algebra, env);
}

TruthTerm eval_formula(const Clause& c, const Interpretation& interpretation, const Algebra& algebra) {
  const VarSet vars = free_vars(c);
  const std::vector<std::string> names(vars.begin(), vars.end());
  TruthTerm acc = TruthTerm::top();
  for_each_tuple(interpretation.domain, names.size(), [&](const std::vector<FOTerm>& values) {
    Env env;
    for (std::size_t i = 0; i < names.size(); ++i) env.emplace(names[i], values[i]);
    acc = algebra.meet(acc, eval_clause_env(c, interpretation, algebra, env));
  });
  return acc;
}

bool accepts(const TruthTerm& value, SatMode mode, const Algebra& algebra) {
  const auto order = algebra.compare(value, TruthTerm::middle());
  return mode == SatMode::Strict ? order > 0 : order >= 0;
}

namespace {

struct GroundLiteral {
  std::size_t atom;
  TruthTerm annotation;
};

class GroundSearch {
 public:
  // modes[i] overrides options.mode for clause i when given.
  GroundSearch(std::span<const AnnotatedClause> clauses, std::span<const SatMode> modes, const OracleOptions& options,
               const Algebra& algebra)
      : options_(options), algebra_(algebra), sample_(algebra.enumerate_terms(options.truth_depth)) {
    for (const auto& c : clauses) {
      modes_.push_back(modes.empty() ? options.mode : modes[modes_.size()]);
      if (!c.clause.is_ground()) throw UsageError("oracle input must be ground: " + to_string(c.clause, algebra));
      std::vector<GroundLiteral> lits;
      std::size_t last = 0;
      for (const auto& l : c.clause.literals()) {
        auto it = std::find(atoms_.begin(), atoms_.end(), l.atom);
        const std::size_t id = it - atoms_.begin();
        if (it == atoms_.end()) atoms_.push_back(l.atom);
        lits.push_back({id, l.annotation});
        last = std::max(last, id + 1);
      }
      // Clauses are checked as soon as their last atom has a value; empty
      // clauses are checked before anything is assigned.
      if (checks_.size() <= last) checks_.resize(last + 1);
      checks_[last].push_back(clauses_.size());
      clauses_.push_back(std::move(lits));
    }
    checks_.resize(atoms_.size() + 1);
    values_.resize(atoms_.size());
  }

  SatResult run() {
    SatResult result;
    if (!holds_at(0)) return finish(result, false);
    return finish(result, search(0));
  }

  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  bool holds_at(std::size_t level) const {
    for (std::size_t c : checks_[level]) {
      TruthTerm acc = TruthTerm::bottom();
      for (const auto& l : clauses_[c]) acc = algebra_.join(acc, eval_literal(*values_[l.atom], l.annotation, algebra_));
      if (!accepts(acc, modes_[c], algebra_)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == atoms_.size()) return true;
    for (const auto& v : sample_) {
      if (++nodes_ > options_.max_nodes) {
        throw ResourceError("oracle search exceeded " + std::to_string(options_.max_nodes) + " nodes");
      }
      values_[depth] = &v;
      if (holds_at(depth + 1) && search(depth + 1)) return true;
    }
    return false;
  }

  SatResult finish(SatResult& result, bool satisfiable) {
    result.satisfiable = satisfiable;
    result.nodes = nodes_;
    if (satisfiable) {
      Interpretation witness;
      std::set<FOTerm> domain;
      for (std::size_t i = 0; i < atoms_.size(); ++i) {
        witness.atoms.emplace(atoms_[i], *values_[i]);
        for (const auto& t : atoms_[i].args) domain.insert(t);
      }
      // Subterms of the atom arguments complete the syntactic domain.
      std::vector<FOTerm> stack(domain.begin(), domain.end());
      while (!stack.empty()) {
        FOTerm t = std::move(stack.back());
        stack.pop_back();
        for (const auto& a : t.args) {
          if (domain.insert(a).second) stack.push_back(a);
        }
      }
      if (domain.empty()) domain.insert(FOTerm::constant("a"));
      witness.domain.assign(domain.begin(), domain.end());
      result.witness = std::move(witness);
    }
    return std::move(result);
  }

  const OracleOptions& options_;
  const Algebra& algebra_;
  std::vector<TruthTerm> sample_;
  std::vector<Atom> atoms_;
  std::vector<std::vector<GroundLiteral>> clauses_;
  std::vector<SatMode> modes_;
  std::vector<std::vector<std::size_t>> checks_;
  std::vector<const TruthTerm*> values_;
  std::size_t nodes_ = 0;
};

}  // namespace

SatResult check_sat(std::span<const AnnotatedClause> clauses, const OracleOptions& options, const Algebra& algebra) {
  return GroundSearch(clauses, {}, options, algebra).run();
}

bool entails(std::span<const AnnotatedClause> premises, const Clause& conclusion, std::size_t truth_depth,
             const Algebra& algebra, std::size_t max_nodes) {
  // A counter-model strictly satisfies the premises and gives every
  // conclusion literal a value <= W, i.e. its negation a value >= W.
  if (!conclusion.is_ground()) throw UsageError("oracle input must be ground: " + to_string(conclusion, algebra));
  std::vector<AnnotatedClause> set(premises.begin(), premises.end());
  std::vector<SatMode> modes(set.size(), SatMode::Strict);
  for (const auto& l : conclusion.literals()) {
    set.push_back({Clause({{l.atom, algebra.negate(l.annotation)}}), TruthTerm::top()});
    modes.push_back(SatMode::Weak);
  }
  OracleOptions options;
  options.truth_depth = truth_depth;
  options.max_nodes = max_nodes;
  return !GroundSearch(set, modes, options, algebra).run().satisfiable;
}

SatResult check_sat_over_domain(std::span<const Formula> formulas, std::span<const Clause> clauses,
                                std::size_t domain_size, const OracleOptions& options, const Algebra& algebra) {
  if (domain_size == 0) throw UsageError("domain must be non-empty");
  Arities functions;
  Arities predicates;
  for (const auto& f : formulas) formula_symbols(f, functions, predicates);
  for (const auto& c : clauses) clause_symbols(c, functions, predicates);

  Interpretation interpretation;
  for (std::size_t i = 1; i <= domain_size; ++i) interpretation.domain.push_back(FOTerm::constant("e" + std::to_string(i)));
  const std::vector<TruthTerm> sample = algebra.enumerate_terms(options.truth_depth);

  // One slot per function table entry and per atom; each slot cycles
  // through its value range in odometer order.
  std::vector<FOTerm*> term_slots;
  std::vector<TruthTerm*> atom_slots;
  for (const auto& [name, arity] : functions) {
    auto& table = interpretation.functions[name];
    for_each_tuple(interpretation.domain, arity, [&](const std::vector<FOTerm>& args) {
      table.emplace(args, interpretation.domain[0]);
    });
    for (auto& [args, value] : table) term_slots.push_back(&value);
  }
  for (const auto& [name, arity] : predicates) {
    for_each_tuple(interpretation.domain, arity, [&](const std::vector<FOTerm>& args) {
      interpretation.atoms.emplace(Atom{name, args}, sample[0]);
    });
  }
  for (auto& [atom, value] : interpretation.atoms) atom_slots.push_back(&value);

  std::vector<std::size_t> index(term_slots.size() + atom_slots.size(), 0);
  SatResult result;
  for (;;) {
    if (++result.nodes > options.max_nodes) {
      throw ResourceError("model search exceeded " + std::to_string(options.max_nodes) + " interpretations");
    }
    bool model = true;
    for (const auto& f : formulas) {
      if (!accepts(eval_formula(f, interpretation, algebra), options.mode, algebra)) {
        model = false;
        break;
      }
    }
    for (std::size_t i = 0; model && i < clauses.size(); ++i) {
      model = accepts(eval_formula(clauses[i], interpretation, algebra), options.mode, algebra);
    }
    if (model) {
      result.satisfiable = true;
      result.witness = interpretation;
      return result;
    }
    std::size_t k = index.size();
    for (;;) {
      if (k == 0) return result;
      --k;
      const bool term_slot = k < term_slots.size();
      const std::size_t range = term_slot ? domain_size : sample.size();
      index[k] = (index[k] + 1) % range;
      if (term_slot) {
        *term_slots[k] = interpretation.domain[index[k]];
      } else {
        *atom_slots[k - term_slots.size()] = sample[index[k]];
      }
      if (index[k] != 0) break;
    }
  }
}

}  // namespace hedgeres
