// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hedgeres/errors.hpp"
#include "hedgeres/normalize.hpp"
#include "hedgeres/oracle.hpp"
#include "hedgeres/parser.hpp"
#include "hedgeres/printer.hpp"
#include "hedgeres/proof_io.hpp"
#include "hedgeres/saturate.hpp"
#include "support.hpp"

using namespace hedgeres;
using testing::clauses_of;
using testing::std_alg;
using testing::tt;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

class Failures {
 public:
  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ++count_;
    if (first_.empty()) first_ = what;
  }
  Verdict verdict(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, std::to_string(count_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

const char* kPaperExample = R"(
clause A(?x):MFalse | B(?z):MFalse | C(?x):PTrue.
clause C(?y):MFalse | D(?y):VMTrue.
clause C(?t):VVTrue | E(?t, f(?t)):MFalse.
clause E(a, ?u):True.
clause A(a):VTrue.
clause B(a):LTrue.
clause D(a):MFalse.
)";

std::string show(const AnnotatedClause& c) { return to_string(c, std_alg()); }

ReplayStep res(std::size_t p1, std::size_t i, std::size_t p2, std::size_t j) { return {Rule::Resolve, {p1, p2}, {i, j}}; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Verdict replay_tree(const std::vector<ReplayStep>& script, const std::vector<std::string>& expected) {
  Failures f;
  const auto start = std::chrono::steady_clock::now();
  const ProofTree proof = replay(clauses_of(kPaperExample), script, std_alg());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const std::string got = show(proof.node(7 + k).clause);
    f.expect(got == expected[k], "step " + std::to_string(k) + " gave " + got);
  }
  f.expect(proof.root == 6 + expected.size(), "root id");
  const double t = seconds_since(start);
  f.expect(t < 1.0, "runtime " + std::to_string(t) + " s");
  return f.verdict("conclusion " + show(proof.root_node().clause));
}

// 1
Verdict tree_one() {
  return replay_tree({res(0, 0, 4, 0), res(7, 0, 5, 0), res(8, 0, 1, 0), res(9, 0, 6, 0)},
                     {"(B(?z):MFalse | C(a):PTrue, MTrue)", "(C(a):PTrue, LTrue)", "(D(a):VMTrue, LTrue)",
                      "([], LTrue)"});
}

// 2
Verdict tree_two() {
  return replay_tree({res(1, 1, 6, 0), res(7, 0, 2, 0), res(8, 0, 3, 0)},
                     {"(C(a):MFalse, MTrue)", "(E(a, f(a)):MFalse, MTrue)", "([], True)"});
}

// 3
Verdict best_search() {
  Failures f;
  const auto start = std::chrono::steady_clock::now();
  SearchBudget budget;
  budget.max_clauses = 10000;
  budget.strategy = Strategy::Best;
  const auto r = saturate(clauses_of(kPaperExample), budget, std_alg());
  const double t = seconds_since(start);
  f.expect(r.outcome == Outcome::Refuted, "not refuted");
  if (r.proof) f.expect(std_alg().less_equal(tt("True"), r.proof->reliability()), "reliability below True");
  f.expect(t < 10.0, "runtime " + std::to_string(t) + " s");
  return f.verdict("reliability " + (r.proof ? std_alg().format(r.proof->reliability()) : std::string("none")) +
                   ", " + std::to_string(r.derived) + " derived");
}

// 4
Verdict reliability_formula() {
  Failures f;
  const auto& a = std_alg();
  const TruthTerm top = TruthTerm::top();
  const auto check_triple = [&](const TruthTerm& r1, const TruthTerm& r2, const char* x, const char* y,
                                const char* want) {
    const auto r = combine_reliability(r1, r2, tt(x), tt(y), a);
    f.expect(r && *r == tt(want), std::string("triple ") + x + "," + y);
  };
  check_triple(top, top, "MFalse", "VTrue", "MTrue");
  check_triple(tt("MTrue"), top, "MFalse", "LTrue", "LTrue");
  check_triple(tt("MTrue"), top, "MFalse", "True", "True");

  const testing::NumericOrder model(a);
  std::mt19937 rng(2024);
  const auto terms = a.enumerate_terms(2);
  std::vector<TruthTerm> reliable;
  for (const auto& t : terms) {
    if (a.less_equal(TruthTerm::middle(), t)) reliable.push_back(t);
  }
  std::size_t done = 0;
  while (done < 1000) {
    const TruthTerm& r1 = reliable[rng() % reliable.size()];
    const TruthTerm& r2 = reliable[rng() % reliable.size()];
    const TruthTerm& x = terms[rng() % terms.size()];
    const TruthTerm& y = terms[rng() % terms.size()];
    const double vx = model.value(x);
    const double vy = model.value(y);
    if (!(std::min(vx, vy) < 0.5 && std::max(vx, vy) >= 0.5)) continue;
    ++done;
    const auto r = combine_reliability(r1, r2, x, y, a);
    if (!r) {
      f.expect(false, "rule rejected " + a.format(x) + "," + a.format(y));
      continue;
    }
    f.expect(a.less_equal(*r, r1) && a.less_equal(*r, r2), "result above a premise");
    f.expect(a.less_equal(TruthTerm::middle(), *r), "result below W");
    const double expected =
        std::min({model.value(r1), model.value(r2), 1.0 - std::min(vx, vy), std::max(vx, vy)});
    f.expect(std::abs(model.value(*r) - expected) < 1e-12, "numeric model disagrees");
  }
  return f.verdict("3 worked triples, 1000 random tuples");
}

// 5
Verdict order_axioms() {
  Failures f;
  const auto start = std::chrono::steady_clock::now();
  const auto& a = std_alg();
  const auto terms = a.enumerate_terms(3);
  const std::size_t n = terms.size();
  std::vector<int> cmp(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto o = a.compare(terms[i], terms[j]);
      cmp[i * n + j] = o < 0 ? -1 : (o > 0 ? 1 : 0);
    }
  }
  const testing::NumericOrder model(a);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      f.expect(cmp[i * n + j] == -cmp[j * n + i], "not antisymmetric");
      f.expect((cmp[i * n + j] == 0) == (i == j), "distinct terms compare equal");
      f.expect(cmp[i * n + j] == model.compare(terms[i], terms[j]), "numeric model disagrees");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cmp[i * n + j] >= 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (cmp[j * n + k] < 0) f.expect(cmp[i * n + k] < 0, "not transitive");
      }
    }
  }
  f.expect(a.less(tt("True"), tt("VTrue")), "True < VTrue");
  f.expect(a.less(tt("PTrue"), tt("True")), "PTrue < True");
  f.expect(a.less(tt("False"), tt("LFalse")), "False < LFalse");
  f.expect(a.less(tt("LPTrue"), tt("MPTrue")), "LPTrue < MPTrue");
  const double t = seconds_since(start);
  f.expect(t < 60.0, "runtime " + std::to_string(t) + " s");
  return f.verdict(std::to_string(n) + " terms, " + std::to_string(n * n * n) + " triples");
}

// 6
Verdict algebraic_laws() {
  Failures f;
  const auto& a = std_alg();
  const auto small = a.enumerate_terms(2);
  for (const auto& x : small) {
    f.expect(a.negate(a.negate(x)) == x, "double negation");
    for (const auto& y : small) {
      f.expect(a.meet(x, y) == a.meet(y, x), "meet commutes");
      f.expect(a.join(x, y) == a.join(y, x), "join commutes");
      for (const auto& z : small) {
        f.expect(a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z)), "meet associates");
        f.expect(a.join(a.join(x, y), z) == a.join(x, a.join(y, z)), "join associates");
        f.expect(a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z)), "meet distributes");
        f.expect(a.join(x, a.meet(y, z)) == a.meet(a.join(x, y), a.join(x, z)), "join distributes");
      }
    }
  }
  const auto big = a.enumerate_terms(3);
  for (const auto& x : big) {
    for (const auto& y : big) {
      f.expect(a.less_equal(x, y) == a.less_equal(a.negate(y), a.negate(x)), "negation is not antitone");
      f.expect(a.negate(a.meet(x, y)) == a.join(a.negate(x), a.negate(y)), "De Morgan for meet");
      f.expect(a.negate(a.join(x, y)) == a.meet(a.negate(x), a.negate(y)), "De Morgan for join");
    }
  }
  return f.verdict(std::to_string(small.size()) + " terms at depth 2, " + std::to_string(big.size()) +
                   " at depth 3");
}

// 7
Verdict literal_negation() {
  Failures f;
  const auto& a = std_alg();
  const auto terms = a.enumerate_terms(2);
  for (const auto& v : terms) {
    for (const auto& ann : terms) {
      f.expect(eval_literal(v, a.negate(ann), a) == a.negate(eval_literal(v, ann, a)),
               a.format(v) + " / " + a.format(ann));
    }
  }
  return f.verdict(std::to_string(terms.size() * terms.size()) + " pairs");
}

std::vector<TruthTerm> linguistic_terms(std::size_t depth) {
  std::vector<TruthTerm> out;
  for (const auto& t : std_alg().enumerate_terms(depth)) {
    if (!t.is_constant()) out.push_back(t);
  }
  return out;
}

// 8
Verdict soundness() {
  Failures f;
  const auto start = std::chrono::steady_clock::now();
  const auto& a = std_alg();
  const auto sample = linguistic_terms(1);
  const std::vector<std::string> atoms = {"A", "B", "C"};
  std::mt19937 rng(8);
  auto random_clause = [&] {
    std::vector<Literal> lits;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
      lits.push_back({Atom{atoms[rng() % atoms.size()], {}}, sample[rng() % sample.size()]});
    }
    return AnnotatedClause{Clause(std::move(lits)), TruthTerm::top()};
  };
  std::size_t checked = 0;
  while (checked < 200) {
    const AnnotatedClause c1 = random_clause();
    const AnnotatedClause c2 = random_clause();
    const std::size_t i = rng() % c1.clause.size();
    const std::size_t j = rng() % c2.clause.size();
    const auto r = resolve(c1, c2, i, j, a);
    if (!r) continue;
    ++checked;
    const std::vector<AnnotatedClause> premises = {c1, c2};
    f.expect(entails(premises, r->clause.clause, 2, a), show(c1) + " with " + show(c2));
  }
  const double t = seconds_since(start);
  f.expect(t < 120.0, "runtime " + std::to_string(t) + " s");
  return f.verdict("200 resolvents, 0 violations");
}

// 9
Verdict completeness() {
  Failures f;
  const auto& a = std_alg();
  const std::vector<std::string> pool_names = {"True", "False", "VTrue", "VFalse", "MTrue", "MFalse"};
  std::vector<TruthTerm> pool;
  for (const auto& name : pool_names) pool.push_back(tt(name));
  // Clauses mention each of the two atoms at most once.
  std::vector<Clause> clauses;
  const Atom atom_a{"A", {}};
  const Atom atom_b{"B", {}};
  for (const auto& x : pool) {
    clauses.emplace_back(std::vector<Literal>{{atom_a, x}});
    clauses.emplace_back(std::vector<Literal>{{atom_b, x}});
    for (const auto& y : pool) clauses.emplace_back(std::vector<Literal>{{atom_a, x}, {atom_b, y}});
  }
  OracleOptions options;
  options.truth_depth = 2;
  SearchBudget budget;
  budget.max_clauses = 1000;
  std::size_t sets = 0;
  std::size_t unsat = 0;
  const std::size_t n = clauses.size();
  auto visit = [&](const std::vector<std::size_t>& pick) {
    std::vector<AnnotatedClause> s;
    for (std::size_t k : pick) s.push_back({clauses[k], TruthTerm::top()});
    ++sets;
    if (check_sat(s, options, a).satisfiable) return;
    ++unsat;
    const auto r = saturate(s, budget, a);
    std::string text;
    for (const auto& c : s) text += show(c) + " ";
    f.expect(r.outcome == Outcome::Refuted, "no refutation for " + text);
  };
  for (std::size_t i = 0; i < n; ++i) {
    visit({i});
    for (std::size_t j = i + 1; j < n; ++j) {
      visit({i, j});
      for (std::size_t k = j + 1; k < n; ++k) visit({i, j, k});
    }
  }
  return f.verdict(std::to_string(sets) + " sets of up to 3 clauses, " + std::to_string(unsat) +
                   " strictly unsatisfiable, all refuted");
}

// Variable-to-variable renaming of a clause.
Clause with_vars_renamed(const Clause& c, const std::string& suffix) {
  Substitution s;
  for (const auto& v : free_vars(c)) s.bind(v, FOTerm::variable(v + suffix));
  return s.apply(c);
}

bool clause_matches(const Clause& general, const Clause& ground, std::size_t index, Matching& theta) {
  if (index == general.size()) {
    std::vector<Literal> image;
    for (const auto& l : general.literals()) {
      Substitution s;
      for (const auto& [v, t] : theta) s.bind(v, t);
      image.push_back(s.apply(l));
    }
    return same_literals(Clause(std::move(image)), ground);
  }
  const Literal& l = general[index];
  for (const auto& g : ground.literals()) {
    if (g.annotation != l.annotation) continue;
    Matching extended = theta;
    if (!match(l.atom, g.atom, extended)) continue;
    if (clause_matches(general, ground, index + 1, extended)) return true;
  }
  return false;
}

bool is_instance(const Clause& general, const Clause& ground) {
  Matching theta;
  return clause_matches(general, ground, 0, theta);
}

std::vector<AnnotatedClause> with_factors(const AnnotatedClause& c) {
  std::vector<AnnotatedClause> out = {c};
  const std::size_t n = c.clause.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    }
    if (subset.size() < 2) continue;
    bool same = true;
    for (std::size_t i : subset) {
      same = same && c.clause[i].annotation == c.clause[subset[0]].annotation &&
             c.clause[i].atom.predicate == c.clause[subset[0]].atom.predicate;
    }
    if (!same) continue;
    if (auto fa = factor(c, subset)) out.push_back(fa->clause);
  }
  return out;
}

// 10
Verdict lifting() {
  Failures f;
  const auto& a = std_alg();
  std::mt19937 rng(10);
  const std::vector<TruthTerm> anns = {tt("True"), tt("False"), tt("MTrue"), tt("VFalse")};
  auto random_term = [&](const std::string& var_prefix) {
    switch (rng() % 4) {
      case 0: return FOTerm::variable(var_prefix + std::to_string(rng() % 2));
      case 1: return FOTerm::constant(rng() % 2 ? "a" : "b");
      case 2: return FOTerm::function("f", {FOTerm::variable(var_prefix + std::to_string(rng() % 2))});
      default: return FOTerm::variable(var_prefix + "0");
    }
  };
  auto random_clause = [&](const std::string& prefix) {
    std::vector<Literal> lits;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
      const bool binary = rng() % 2;
      Atom atom = binary ? Atom{"Q", {random_term(prefix), random_term(prefix)}} : Atom{"P", {random_term(prefix)}};
      lits.push_back({std::move(atom), anns[rng() % anns.size()]});
    }
    return AnnotatedClause{Clause(std::move(lits)), TruthTerm::top()};
  };
  const std::vector<FOTerm> ground_terms = {FOTerm::constant("a"), FOTerm::constant("b"), parse_term("f(a)")};
  auto grounding = [&](const Clause& c) {
    Substitution s;
    for (const auto& v : free_vars(c)) s.bind(v, ground_terms[rng() % ground_terms.size()]);
    return s;
  };

  std::size_t triples = 0;
  std::size_t ground_resolvents = 0;
  while (triples < 100) {
    const AnnotatedClause c1 = random_clause("x");
    const AnnotatedClause c2 = random_clause("y");
    const AnnotatedClause g1{grounding(c1.clause).apply(c1.clause), c1.reliability};
    const AnnotatedClause g2{grounding(c2.clause).apply(c2.clause), c2.reliability};
    std::vector<Clause> ground;
    for (std::size_t i = 0; i < g1.clause.size(); ++i) {
      for (std::size_t j = 0; j < g2.clause.size(); ++j) {
        if (auto r = resolve(g1, g2, i, j, a)) ground.push_back(r->clause.clause);
      }
    }
    if (ground.empty()) continue;
    ++triples;
    std::vector<Clause> general;
    for (const auto& f1 : with_factors(c1)) {
      for (const auto& f2raw : with_factors(c2)) {
        const AnnotatedClause f2{with_vars_renamed(f2raw.clause, "'"), f2raw.reliability};
        for (std::size_t i = 0; i < f1.clause.size(); ++i) {
          for (std::size_t j = 0; j < f2.clause.size(); ++j) {
            if (auto r = resolve(f1, f2, i, j, a)) general.push_back(r->clause.clause);
          }
        }
      }
    }
    for (const auto& g : ground) {
      ++ground_resolvents;
      const bool covered = std::any_of(general.begin(), general.end(), [&](const Clause& c) { return is_instance(c, g); });
      f.expect(covered, "ground resolvent " + to_string(g, a) + " of " + show(c1) + " and " + show(c2));
    }
  }
  return f.verdict("100 triples, " + std::to_string(ground_resolvents) + " ground resolvents lifted");
}

Formula random_formula(std::mt19937& rng, int depth, std::vector<std::string>& bound) {
  static const std::vector<std::string> anns = {"True", "False", "VTrue", "MFalse", "LTrue"};
  auto argument = [&] {
    if (!bound.empty() && rng() % 4 != 0) return FOTerm::variable(bound[rng() % bound.size()]);
    return FOTerm::constant("a");
  };
  const unsigned pick = depth <= 0 ? 0 : rng() % 8;
  switch (pick) {
    case 0:
    case 1: {
      Atom atom = rng() % 2 ? Atom{"P", {argument()}} : Atom{"Q", {argument()}};
      return Formula::lit({std::move(atom), tt(anns[rng() % anns.size()])});
    }
    case 2: return Formula::negation(random_formula(rng, depth - 1, bound));
    case 3:
    case 4: {
      static const Formula::Kind kinds[] = {Formula::Kind::And, Formula::Kind::Or, Formula::Kind::Implies,
                                            Formula::Kind::Iff};
      const Formula::Kind kind = kinds[rng() % 4];
      Formula lhs = random_formula(rng, depth - 1, bound);
      Formula rhs = random_formula(rng, depth - 1, bound);
      return Formula::binary(kind, std::move(lhs), std::move(rhs));
    }
    default: {
      const std::string var = "v" + std::to_string(bound.size());
      bound.push_back(var);
      Formula body = random_formula(rng, depth - 1, bound);
      bound.pop_back();
      return Formula::quantified(rng() % 2 ? Formula::Kind::ForAll : Formula::Kind::Exists, var, std::move(body));
    }
  }
}

// 11
Verdict cnf_preservation() {
  Failures f;
  const auto& a = std_alg();
  std::mt19937 rng(11);
  OracleOptions options;
  options.truth_depth = 1;
  std::size_t satisfiable = 0;
  for (int round = 0; round < 50; ++round) {
    // Conjunctions of a few pieces give a useful share of unsatisfiable cases.
    std::vector<std::string> bound;
    Formula formula = random_formula(rng, 3, bound);
    for (unsigned k = rng() % 3; k < 3; ++k) {
      formula = Formula::binary(Formula::Kind::And, std::move(formula), random_formula(rng, 3, bound));
    }
    std::vector<Clause> clauses;
    for (auto& c : clausify(formula, TruthTerm::top(), a)) clauses.push_back(c.clause);
    const std::vector<Formula> fs = {formula};
    const bool direct = check_sat_over_domain(fs, {}, 2, options, a).satisfiable;
    const bool via = check_sat_over_domain({}, clauses, 2, options, a).satisfiable;
    f.expect(direct == via, to_string(formula, a));
    satisfiable += direct ? 1 : 0;
  }
  return f.verdict("50 formulas, " + std::to_string(satisfiable) + " satisfiable");
}

// 12
Verdict boundary() {
  Failures f;
  const auto& a = std_alg();
  const auto s = clauses_of("clause A:VTrue. clause A:VFalse.");
  OracleOptions weak;
  weak.mode = SatMode::Weak;
  const auto w = check_sat(s, weak, a);
  f.expect(w.satisfiable, "not weakly satisfiable");
  if (w.witness) f.expect(w.witness->atoms.at(Atom{"A", {}}) == TruthTerm::middle(), "witness is not W");
  f.expect(!check_sat(s, OracleOptions{}, a).satisfiable, "strictly satisfiable");
  const auto r = saturate(s, SearchBudget{}, a);
  f.expect(r.outcome == Outcome::Refuted && r.proof->reliability() == tt("VTrue"), "refutation reliability");
  return f.verdict("weak witness A=W, strictly unsat, refuted with VTrue");
}

std::string random_term_text(std::mt19937& rng, const std::vector<std::string>& vars, int depth) {
  const unsigned pick = depth <= 0 ? rng() % 2 : rng() % 4;
  if (pick == 0 && !vars.empty()) return "?" + vars[rng() % vars.size()];
  if (pick <= 1) return rng() % 2 ? "a" : "b";
  if (pick == 2) return "f(" + random_term_text(rng, vars, depth - 1) + ")";
  return "g(" + random_term_text(rng, vars, depth - 1) + ", " + random_term_text(rng, vars, depth - 1) + ")";
}

std::string random_literal_text(std::mt19937& rng, const std::vector<std::string>& vars,
                                const std::vector<std::string>& anns) {
  std::string atom;
  switch (rng() % 3) {
    case 0: atom = "P(" + random_term_text(rng, vars, 2) + ")"; break;
    case 1: atom = "Q(" + random_term_text(rng, vars, 1) + ", " + random_term_text(rng, vars, 1) + ")"; break;
    default: atom = "R"; break;
  }
  return atom + ":" + anns[rng() % anns.size()];
}

std::string random_formula_text(std::mt19937& rng, std::vector<std::string>& bound, const std::vector<std::string>& anns,
                                int depth) {
  const unsigned pick = depth <= 0 ? 0 : rng() % 7;
  switch (pick) {
    case 0:
    case 1: return random_literal_text(rng, bound, anns);
    case 2: return "~" + random_formula_text(rng, bound, anns, depth - 1);
    case 3:
    case 4: {
      static const char* ops[] = {" & ", " | ", " -> ", " <-> "};
      return "(" + random_formula_text(rng, bound, anns, depth - 1) + ops[rng() % 4] +
             random_formula_text(rng, bound, anns, depth - 1) + ")";
    }
    default: {
      const std::string var = "x" + std::to_string(bound.size());
      bound.push_back(var);
      const std::string body = random_formula_text(rng, bound, anns, depth - 1);
      bound.pop_back();
      return std::string(rng() % 2 ? "forall ?" : "exists ?") + var + " . " + body;
    }
  }
}

std::string random_problem_text(std::mt19937& rng, const std::vector<std::string>& anns,
                                const std::vector<std::string>& reliabilities) {
  std::string text;
  if (rng() % 10 == 0) text += format_algebra(std_alg().config()) + "\n";
  const std::size_t statements = 1 + rng() % 5;
  for (std::size_t s = 0; s < statements; ++s) {
    if (rng() % 3 == 0) {
      std::vector<std::string> bound;
      text += "formula " + random_formula_text(rng, bound, anns, 3);
    } else {
      const std::vector<std::string> vars = {"x", "y"};
      text += "clause ";
      const std::size_t n = 1 + rng() % 3;
      for (std::size_t i = 0; i < n; ++i) text += (i ? " | " : "") + random_literal_text(rng, vars, anns);
    }
    if (rng() % 2) text += " @ " + reliabilities[rng() % reliabilities.size()];
    text += ".\n";
  }
  return text;
}

std::vector<std::string> proof_problems() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(testing::source_path("problems"))) {
    if (entry.path().extension() == ".lfol") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// 13
Verdict round_trip_and_schema() {
  Failures f;
  const auto& a = std_alg();
  std::vector<std::string> anns;
  std::vector<std::string> reliabilities;
  for (const auto& t : a.enumerate_terms(2)) {
    if (!t.is_constant()) anns.push_back(a.format(t));
    if (a.less_equal(TruthTerm::middle(), t)) reliabilities.push_back(a.format(t));
  }
  std::mt19937 rng(13);
  const nlohmann::json schema = testing::proof_schema();
  std::size_t validated = 0;
  auto validate = [&](const SaturationResult& r, const std::string& what) {
    if (r.outcome != Outcome::Refuted) return;
    ++validated;
    const std::string problem = testing::schema_violation(schema, nlohmann::json::parse(proof_to_json(r, a)));
    f.expect(problem.empty(), what + ": " + problem);
  };
  SearchBudget budget;
  budget.max_clauses = 50;
  budget.max_depth = 4;
  for (int round = 0; round < 1000; ++round) {
    const std::string text = random_problem_text(rng, anns, reliabilities);
    try {
      const Problem p = parse_problem(text);
      const std::string printed = format_problem(p);
      const Problem q = parse_problem(printed);
      f.expect(q.clauses == p.clauses && q.formulas == p.formulas, "structure changed: " + text);
      f.expect(format_problem(q) == printed, "printing is not stable: " + text);
      validate(saturate(clausify_problem(p), budget, a), "generated problem " + std::to_string(round));
    } catch (const Error& e) {
      f.expect(false, std::string(e.what()) + " in " + text);
    }
  }
  std::size_t files = 0;
  for (const auto& path : proof_problems()) {
    ++files;
    const Problem p = parse_problem(testing::read_text(path), a);
    for (auto strategy : {Strategy::First, Strategy::Best}) {
      SearchBudget b;
      b.strategy = strategy;
      validate(saturate(clausify_problem(p), b, p.algebra), path);
    }
  }
  return f.verdict("1000 problems round-tripped, " + std::to_string(validated) + " proofs validated (" +
                   std::to_string(files) + " problem files)");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(static_cast<std::size_t>(std::stoul(argv[i])));
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"example tree 1 replay", tree_one},
      {"example tree 2 replay", tree_two},
      {"best-first search on the example", best_search},
      {"reliability formula", reliability_formula},
      {"order axioms at depth 3", order_axioms},
      {"algebraic laws", algebraic_laws},
      {"literal negation identity", literal_negation},
      {"soundness against the oracle", soundness},
      {"ground completeness on 2-atom sets", completeness},
      {"lifting", lifting},
      {"clausification preserves satisfiability", cnf_preservation},
      {"weak/strict boundary", boundary},
      {"round trip and proof schema", round_trip_and_schema},
  };
  int failed = 0;
  std::size_t ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.contains(i + 1)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(start);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", t);
    std::cout << (v.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " [" << timing
              << "]  " << v.detail << std::endl;
    failed += v.ok ? 0 : 1;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
