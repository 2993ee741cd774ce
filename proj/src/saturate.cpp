#include "hedgeres/saturate.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

#include "hedgeres/errors.hpp"
#include "hedgeres/printer.hpp"

namespace hedgeres {

std::optional<TruthTerm> combine_reliability(const TruthTerm& rel1, const TruthTerm& rel2, const TruthTerm& a,
                                             const TruthTerm& b, const Algebra& algebra) {
  const TruthTerm low = algebra.meet(a, b);
  const TruthTerm high = algebra.join(a, b);
  const TruthTerm w = TruthTerm::middle();
  if (!algebra.less(low, w) || algebra.less(high, w)) return std::nullopt;
  return algebra.meet(algebra.meet(rel1, rel2), algebra.meet(algebra.negate(low), high));
}

std::optional<Inference> resolve(const AnnotatedClause& c1, const AnnotatedClause& c2, std::size_t i,
                                 std::size_t j, const Algebra& algebra) {
  if (i >= c1.clause.size() || j >= c2.clause.size()) throw UsageError("literal index out of range");
  const Literal& l1 = c1.clause[i];
  const Literal& l2 = c2.clause[j];
  auto reliability = combine_reliability(c1.reliability, c2.reliability, l1.annotation, l2.annotation, algebra);
  if (!reliability) return std::nullopt;
  auto gamma = mgu(l1.atom, l2.atom);
  if (!gamma) return std::nullopt;
  std::vector<Literal> lits;
  lits.reserve(c1.clause.size() + c2.clause.size() - 2);
  for (std::size_t k = 0; k < c1.clause.size(); ++k) {
    if (k != i) lits.push_back(gamma->apply(c1.clause[k]));
  }
  for (std::size_t k = 0; k < c2.clause.size(); ++k) {
    if (k != j) lits.push_back(gamma->apply(c2.clause[k]));
  }
  return Inference{{Clause(std::move(lits)), *reliability}, std::move(*gamma)};
}

std::optional<Inference> factor(const AnnotatedClause& c, std::span<const std::size_t> subset) {
  if (subset.size() < 2) throw UsageError("factoring needs at least two literals");
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= c.clause.size()) throw UsageError("literal index out of range");
    if (std::find(subset.begin(), subset.begin() + k, subset[k]) != subset.begin() + k) {
      throw UsageError("factoring subset repeats a literal");
    }
    const Literal& l = c.clause[subset[k]];
    if (!(l.annotation == c.clause[subset[0]].annotation)) return std::nullopt;
    atoms.push_back(l.atom);
  }
  auto sigma = mgu(std::span<const Atom>(atoms));
  if (!sigma) return std::nullopt;
  return Inference{{sigma->apply(c.clause), c.reliability}, std::move(*sigma)};
}

namespace {

using VarMap = std::map<std::string, std::string>;

bool variant_term(const FOTerm& a, const FOTerm& b, VarMap& fwd, VarMap& bwd, std::vector<std::string>* trail) {
  if (a.is_variable() || b.is_variable()) {
    if (!a.is_variable() || !b.is_variable()) return false;
    auto f = fwd.find(a.name);
    auto r = bwd.find(b.name);
    if (f == fwd.end() && r == bwd.end()) {
      fwd.emplace(a.name, b.name);
      bwd.emplace(b.name, a.name);
      if (trail) trail->push_back(a.name);
      return true;
    }
    return f != fwd.end() && r != bwd.end() && f->second == b.name && r->second == a.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!variant_term(a.args[i], b.args[i], fwd, bwd, trail)) return false;
  }
  return true;
}

bool variant_literal(const Literal& a, const Literal& b, VarMap& fwd, VarMap& bwd,
                     std::vector<std::string>* trail = nullptr) {
  if (a.atom.predicate != b.atom.predicate || a.atom.args.size() != b.atom.args.size() ||
      !(a.annotation == b.annotation)) {
    return false;
  }
  for (std::size_t i = 0; i < a.atom.args.size(); ++i) {
    if (!variant_term(a.atom.args[i], b.atom.args[i], fwd, bwd, trail)) return false;
  }
  return true;
}

// Literal with variables numbered by first occurrence. `order` receives the
// variables in that order.
std::string local_form(const Literal& l, std::vector<std::string>* order = nullptr) {
  std::map<std::string, std::size_t> numbering;
  std::string out = l.atom.predicate + std::to_string(TruthTermHash{}(l.annotation)) + '(';
  std::function<void(const FOTerm&)> walk = [&](const FOTerm& t) {
    if (t.is_variable()) {
      auto [it, fresh] = numbering.emplace(t.name, numbering.size());
      if (fresh && order) order->push_back(t.name);
      out += '#' + std::to_string(it->second);
      return;
    }
    out += t.name;
    if (t.args.empty()) return;
    out += '(';
    for (const auto& a : t.args) {
      walk(a);
      out += ',';
    }
    out += ')';
  };
  for (const auto& t : l.atom.args) {
    walk(t);
    out += ',';
  }
  return out + ')';
}

// One round of colour refinement: a literal's form also records, for each of
// its variables, which kinds of literals that variable occurs in elsewhere.
// Variants pair up literals with equal forms.
std::vector<std::size_t> refined_forms(const Clause& c) {
  std::vector<std::string> local(c.size());
  std::vector<std::vector<std::string>> order(c.size());
  std::map<std::string, std::vector<std::string>> occurrences;
  for (std::size_t k = 0; k < c.size(); ++k) {
    local[k] = local_form(c[k], &order[k]);
    for (std::size_t p = 0; p < order[k].size(); ++p) {
      occurrences[order[k][p]].push_back(local[k] + '@' + std::to_string(p));
    }
  }
  std::map<std::string, std::size_t> var_colour;
  for (auto& [v, occ] : occurrences) {
    std::sort(occ.begin(), occ.end());
    std::string joined;
    for (const auto& o : occ) joined += o + ';';
    var_colour[v] = std::hash<std::string>{}(joined);
  }
  std::vector<std::size_t> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::string s = local[k];
    for (const auto& v : order[k]) s += '|' + std::to_string(var_colour[v]);
    out[k] = std::hash<std::string>{}(s);
  }
  return out;
}

struct VariantSearch {
  const Clause& c1;
  const Clause& c2;
  std::vector<std::size_t> forms1;
  std::vector<std::size_t> forms2;
  std::vector<bool> used;
  VarMap fwd;
  VarMap bwd;
  std::vector<std::string> trail;  // keys of fwd in binding order
  std::size_t steps = 0;
  bool gave_up = false;

  static constexpr std::size_t kMaxSteps = 10000;

  bool from(std::size_t i) {
    if (i == c1.size()) return true;
    const std::size_t n = c2.size();
    // Derived clauses tend to keep literal order, so try position i first.
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t j = (i + step) % n;
      if (used[j] || forms1[i] != forms2[j]) continue;
      if (++steps > kMaxSteps) {
        gave_up = true;
        return false;
      }
      const std::size_t mark = trail.size();
      if (variant_literal(c1[i], c2[j], fwd, bwd, &trail)) {
        used[j] = true;
        if (from(i + 1)) return true;
        used[j] = false;
      }
      while (trail.size() > mark) {
        bwd.erase(fwd.at(trail.back()));
        fwd.erase(trail.back());
        trail.pop_back();
      }
      if (gave_up) return false;
    }
    return false;
  }
};

// Renaming-invariant key; equal keys are necessary for variants.
std::string variant_key(std::vector<std::size_t> forms) {
  std::sort(forms.begin(), forms.end());
  std::string key;
  for (std::size_t f : forms) key += std::to_string(f) + ';';
  return key;
}

std::string predicate_key(const Atom& a) { return a.predicate + '/' + std::to_string(a.args.size()); }

}  // namespace

namespace {

bool variant_with_forms(const Clause& c1, const std::vector<std::size_t>& forms1, const Clause& c2,
                        const std::vector<std::size_t>& forms2) {
  if (c1.size() != c2.size()) return false;
  auto a = forms1;
  auto b = forms2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  // Past the step limit the clauses count as distinct, which only costs
  // a missed deletion.
  VariantSearch search{c1, c2, forms1, forms2, std::vector<bool>(c2.size(), false)};
  return search.from(0);
}

// Variables renamed by first occurrence in literal order; equal strings are
// variants with the same literal order.
std::string ordered_form(const Clause& c) {
  std::map<std::string, std::size_t> numbering;
  std::string out;
  std::function<void(const FOTerm&)> walk = [&](const FOTerm& t) {
    if (t.is_variable()) {
      auto it = numbering.emplace(t.name, numbering.size()).first;
      out += '#' + std::to_string(it->second);
      return;
    }
    out += t.name;
    if (t.args.empty()) return;
    out += '(';
    for (const auto& a : t.args) {
      walk(a);
      out += ',';
    }
    out += ')';
  };
  for (const auto& l : c.literals()) {
    out += l.atom.predicate + std::to_string(TruthTermHash{}(l.annotation)) + '(';
    for (const auto& t : l.atom.args) {
      walk(t);
      out += ',';
    }
    out += ");";
  }
  return out;
}

}  // namespace

bool is_variant(const Clause& c1, const Clause& c2) {
  if (c1.size() != c2.size()) return false;
  return variant_with_forms(c1, refined_forms(c1), c2, refined_forms(c2));
}

bool is_variant(const AnnotatedClause& c1, const AnnotatedClause& c2) { return is_variant(c1.clause, c2.clause); }

TruthTerm set_reliability(std::span<const AnnotatedClause> clauses, const Algebra& algebra) {
  if (clauses.empty()) throw UsageError("reliability of an empty clause set is undefined");
  TruthTerm out = clauses.front().reliability;
  for (const auto& c : clauses.subspan(1)) out = algebra.meet(out, c.reliability);
  return out;
}

std::string VariableNamer::fresh(const std::string& base) {
  // Strip an earlier suffix so repeated renaming does not grow names.
  std::string stem = base;
  if (auto pos = stem.rfind('_'); pos != std::string::npos && pos + 1 < stem.size() &&
                                  std::all_of(stem.begin() + pos + 1, stem.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    stem.resize(pos);
  }
  for (;;) {
    std::string name = stem + "_" + std::to_string(++counter_);
    if (!reserved_.contains(name)) return name;
  }
}

std::pair<AnnotatedClause, Substitution> rename_apart(const AnnotatedClause& c, const VarSet& avoid,
                                                      VariableNamer& namer) {
  Substitution renaming;
  for (const auto& v : free_vars(c.clause)) {
    if (avoid.contains(v)) renaming.bind(v, FOTerm::variable(namer.fresh(v)));
  }
  if (renaming.empty()) return {c, renaming};
  return {AnnotatedClause{renaming.apply(c.clause), c.reliability}, renaming};
}

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::Input: return "input";
    case Rule::Factor: return "factor";
    case Rule::Resolve: return "resolve";
  }
  return "input";
}

const ProofNode& ProofTree::node(std::size_t id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id,
                             [](const ProofNode& n, std::size_t key) { return n.id < key; });
  if (it == nodes.end() || it->id != id) throw UsageError("proof has no node " + std::to_string(id));
  return *it;
}

namespace {

ProofTree extract(const std::vector<ProofNode>& all, std::size_t root) {
  std::vector<bool> seen(all.size(), false);
  std::vector<std::size_t> stack = {root};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    if (seen[id]) continue;
    seen[id] = true;
    for (std::size_t p : all[id].premises) stack.push_back(p);
  }
  ProofTree tree;
  tree.root = root;
  for (std::size_t id = 0; id < all.size(); ++id) {
    if (seen[id]) tree.nodes.push_back(all[id]);
  }
  return tree;
}

VarSet all_vars(const std::vector<AnnotatedClause>& clauses) {
  VarSet out;
  for (const auto& c : clauses) {
    VarSet v = free_vars(c.clause);
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::size_t term_size(const FOTerm& t) {
  std::size_t n = 1;
  for (const auto& a : t.args) n += term_size(a);
  return n;
}

// Symbols in sigma(t), stopping early once past `limit`.
std::size_t instance_size(const FOTerm& t, const Substitution& sigma, std::size_t limit) {
  if (t.is_variable()) {
    const FOTerm* bound = sigma.lookup(t.name);
    return bound ? term_size(*bound) : 1;
  }
  std::size_t n = 1;
  for (const auto& a : t.args) {
    n += instance_size(a, sigma, limit);
    if (n > limit) break;
  }
  return n;
}

bool within_size(const Clause& c, const Substitution& sigma, std::size_t limit) {
  for (const auto& l : c.literals()) {
    std::size_t n = 1;
    for (const auto& t : l.atom.args) n += instance_size(t, sigma, limit);
    if (n > limit) return false;
  }
  return true;
}

struct Limits {
  std::size_t max_depth;
  std::size_t max_atom_size;
};

// Resolves premise `first` with a copy of `second` renamed apart from it.
// With limits, an inference that would exceed them is skipped and `pruned`
// is set instead.
std::optional<ProofNode> resolve_nodes(const ProofNode& first, const ProofNode& second, std::size_t i,
                                       std::size_t j, VariableNamer& namer, const Algebra& algebra,
                                       const Limits* limits = nullptr, bool* pruned = nullptr) {
  // Cheap rejection before any renaming. A quote never occurs in parsed
  // variable names, so the marked atom shares no variable with `first`.
  const Literal& l1 = first.clause.clause[i];
  const Literal& l2 = second.clause.clause[j];
  if (!combine_reliability(first.clause.reliability, second.clause.reliability, l1.annotation, l2.annotation,
                           algebra)) {
    return std::nullopt;
  }
  Substitution mark;
  for (const auto& v : free_vars(l2.atom)) mark.bind(v, FOTerm::variable(v + "'"));
  if (!mgu(l1.atom, mark.apply(l2.atom))) return std::nullopt;
  if (limits && std::max(first.depth, second.depth) + 1 > limits->max_depth) {
    *pruned = true;
    return std::nullopt;
  }

  auto [renamed, renaming] = rename_apart(second.clause, free_vars(first.clause.clause), namer);
  if (limits) {
    const auto sigma = mgu(l1.atom, renamed.clause[j].atom);
    if (!within_size(first.clause.clause, *sigma, limits->max_atom_size) ||
        !within_size(renamed.clause, *sigma, limits->max_atom_size)) {
      *pruned = true;
      return std::nullopt;
    }
  }
  auto result = resolve(first.clause, renamed, i, j, algebra);
  if (!result) return std::nullopt;
  ProofNode node;
  node.clause = std::move(result->clause);
  node.rule = Rule::Resolve;
  node.premises = {first.id, second.id};
  node.substitution = std::move(result->unifier);
  node.renaming = std::move(renaming);
  node.resolved = std::make_pair(i, j);
  node.depth = std::max(first.depth, second.depth) + 1;
  return node;
}

class Saturator {
 public:
  Saturator(const SearchBudget& budget, const Algebra& algebra, VarSet reserved)
      : budget_(budget),
        algebra_(algebra),
        namer_(std::move(reserved)),
        limits_{budget.max_depth, budget.max_atom_size} {}

  SaturationResult run(std::vector<AnnotatedClause> input) {
    for (auto& c : input) {
      ProofNode node;
      node.clause = std::move(c);
      if (add(std::move(node), false) == AddStatus::Stop) return finish();
    }
    while (!passive_.empty()) {
      const std::size_t id = passive_.front();
      passive_.pop_front();
      if (pruned_by_best(nodes_[id].clause.reliability)) continue;
      ++result_.given;
      if (process(id) == AddStatus::Stop) return finish();
    }
    return finish();
  }

 private:
  enum class AddStatus { Kept, Dropped, Stop };

  bool pruned_by_best(const TruthTerm& reliability) const {
    return best_ && algebra_.less_equal(reliability, nodes_[*best_].clause.reliability);
  }

  AddStatus process(std::size_t given) {
    // Factors of the given clause.
    const std::size_t n = nodes_[given].clause.clause.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Clause& c = nodes_[given].clause.clause;
        if (c[i].atom.predicate != c[j].atom.predicate || !(c[i].annotation == c[j].annotation)) continue;
        const std::size_t subset[] = {i, j};
        const auto sigma = mgu(c[i].atom, c[j].atom);
        if (!sigma) continue;
        if (nodes_[given].depth + 1 > limits_.max_depth || !within_size(c, *sigma, limits_.max_atom_size)) {
          incomplete_ = true;
          continue;
        }
        auto f = factor(nodes_[given].clause, subset);
        if (!f) continue;
        ProofNode node;
        node.clause = std::move(f->clause);
        node.rule = Rule::Factor;
        node.premises = {given};
        node.substitution = std::move(f->unifier);
        node.factored = {i, j};
        node.depth = nodes_[given].depth + 1;
        if (add(std::move(node), true) == AddStatus::Stop) return AddStatus::Stop;
      }
    }

    for (std::size_t j = 0; j < n; ++j) {
      index_[predicate_key(nodes_[given].clause.clause[j].atom)].emplace_back(given, j);
    }

    // Resolve every active partner (including the given clause itself)
    // against the given clause, the partner acting as first premise.
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = index_.find(predicate_key(nodes_[given].clause.clause[j].atom));
      for (const auto& [partner, i] : it->second) {
        if (partner == given && i >= j) continue;
        if (pruned_by_best(nodes_[given].clause.reliability)) return AddStatus::Kept;
        bool pruned = false;
        auto node = resolve_nodes(nodes_[partner], nodes_[given], i, j, namer_, algebra_, &limits_, &pruned);
        incomplete_ = incomplete_ || pruned;
        if (!node) continue;
        if (add(std::move(*node), true) == AddStatus::Stop) return AddStatus::Stop;
      }
    }
    return AddStatus::Kept;
  }

  AddStatus add(ProofNode node, bool derived) {
    AnnotatedClause& c = node.clause;
    if (derived) {
      if (node.depth > budget_.max_depth) {
        incomplete_ = true;
        return AddStatus::Dropped;
      }
      if (pruned_by_best(c.reliability)) return AddStatus::Dropped;
    }
    auto& same_order = exact_[ordered_form(c.clause)];
    for (std::size_t other : same_order) {
      if (algebra_.less_equal(c.reliability, nodes_[other].clause.reliability)) return AddStatus::Dropped;
    }
    std::vector<std::size_t> forms = refined_forms(c.clause);
    auto& bucket = variants_[variant_key(forms)];
    for (std::size_t other : bucket) {
      const auto& kept = nodes_[other].clause;
      if (algebra_.less_equal(c.reliability, kept.reliability) &&
          variant_with_forms(kept.clause, forms_[other], c.clause, forms)) {
        return AddStatus::Dropped;
      }
    }
    if (derived) {
      if (result_.derived >= budget_.max_clauses) {
        exhausted_ = true;
        return AddStatus::Stop;
      }
      ++result_.derived;
      if (c.reliability == TruthTerm::middle()) {
        result_.warnings.push_back("derived clause " + std::to_string(nodes_.size()) +
                                   " has reliability exactly W: " + to_string(c, algebra_));
      }
    }
    node.id = nodes_.size();
    bucket.push_back(node.id);
    same_order.push_back(node.id);
    forms_.push_back(std::move(forms));
    const bool empty = c.clause.empty();
    nodes_.push_back(std::move(node));
    if (!empty) {
      passive_.push_back(nodes_.back().id);
      return AddStatus::Kept;
    }
    if (!best_ || algebra_.less(nodes_[*best_].clause.reliability, nodes_.back().clause.reliability)) {
      best_ = nodes_.back().id;
    }
    if (budget_.strategy == Strategy::First || nodes_.back().clause.reliability == TruthTerm::top()) {
      return AddStatus::Stop;
    }
    return AddStatus::Kept;
  }

  SaturationResult finish() {
    if (best_) {
      result_.outcome = Outcome::Refuted;
      result_.proof = extract(nodes_, *best_);
    } else if (exhausted_ || incomplete_) {
      result_.outcome = Outcome::BudgetExhausted;
    } else {
      result_.outcome = Outcome::Saturated;
    }
    return std::move(result_);
  }

  const SearchBudget& budget_;
  const Algebra& algebra_;
  VariableNamer namer_;
  Limits limits_;
  std::vector<ProofNode> nodes_;
  std::deque<std::size_t> passive_;
  std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> index_;
  std::unordered_map<std::string, std::vector<std::size_t>> variants_;
  std::unordered_map<std::string, std::vector<std::size_t>> exact_;
  std::vector<std::vector<std::size_t>> forms_;
  std::optional<std::size_t> best_;
  bool exhausted_ = false;
  bool incomplete_ = false;
  SaturationResult result_;
};

}  // namespace

SaturationResult saturate(std::vector<AnnotatedClause> input, const SearchBudget& budget, const Algebra& algebra) {
  if (budget.max_clauses == 0 || budget.max_depth == 0 || budget.max_atom_size == 0) throw UsageError("search budget must be positive");
  VarSet reserved = all_vars(input);
  VariableNamer namer(reserved);
  // Standardize the inputs apart, keeping the first occurrence of each name.
  VarSet seen;
  for (auto& c : input) {
    auto [renamed, renaming] = rename_apart(c, seen, namer);
    c = std::move(renamed);
    VarSet v = free_vars(c.clause);
    seen.insert(v.begin(), v.end());
    reserved.insert(v.begin(), v.end());
  }
  Saturator saturator(budget, algebra, std::move(reserved));
  return saturator.run(std::move(input));
}

ProofTree replay(const std::vector<AnnotatedClause>& inputs, std::span<const ReplayStep> script,
                 const Algebra& algebra) {
  if (script.empty()) throw UsageError("replay script is empty");
  std::vector<ProofNode> nodes;
  for (const auto& c : inputs) {
    ProofNode node;
    node.id = nodes.size();
    node.clause = c;
    nodes.push_back(std::move(node));
  }
  VariableNamer namer(all_vars(inputs));
  for (std::size_t k = 0; k < script.size(); ++k) {
    const ReplayStep& step = script[k];
    for (std::size_t p : step.premises) {
      if (p >= nodes.size()) throw ReplayError("premise " + std::to_string(p) + " does not exist yet", k);
    }
    std::optional<ProofNode> node;
    if (step.rule == Rule::Resolve) {
      if (step.premises.size() != 2 || step.literals.size() != 2) {
        throw ReplayError("resolve needs two premises and two literal indices", k);
      }
      const auto& first = nodes[step.premises[0]];
      const auto& second = nodes[step.premises[1]];
      if (step.literals[0] >= first.clause.clause.size() || step.literals[1] >= second.clause.clause.size()) {
        throw ReplayError("literal index out of range", k);
      }
      node = resolve_nodes(first, second, step.literals[0], step.literals[1], namer, algebra);
      if (!node) {
        throw ReplayError("resolution of " + to_string(first.clause.clause[step.literals[0]], algebra) +
                              " against " + to_string(second.clause.clause[step.literals[1]], algebra) +
                              " is not applicable",
                          k);
      }
    } else if (step.rule == Rule::Factor) {
      if (step.premises.size() != 1) throw ReplayError("factor needs one premise", k);
      const auto& premise = nodes[step.premises[0]];
      std::optional<Inference> f;
      try {
        f = factor(premise.clause, step.literals);
      } catch (const UsageError& e) {
        throw ReplayError(e.what(), k);
      }
      if (!f) throw ReplayError("factoring is not applicable", k);
      node.emplace();
      node->clause = std::move(f->clause);
      node->rule = Rule::Factor;
      node->premises = step.premises;
      node->substitution = std::move(f->unifier);
      node->factored = step.literals;
      node->depth = premise.depth + 1;
    } else {
      throw ReplayError("input is not an inference rule", k);
    }
    node->id = nodes.size();
    nodes.push_back(std::move(*node));
  }
  return extract(nodes, nodes.size() - 1);
}

}  // namespace hedgeres
