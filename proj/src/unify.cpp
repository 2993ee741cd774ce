#include "hedgeres/unify.hpp"

namespace hedgeres {

Substitution Substitution::single(std::string var, FOTerm t) {
  Substitution s;
  s.bind(std::move(var), std::move(t));
  return s;
}

void Substitution::bind(std::string var, FOTerm t) {
  if (t.is_variable() && t.name == var) {
    bindings_.erase(var);
    return;
  }
  bindings_.insert_or_assign(std::move(var), std::move(t));
}

const FOTerm* Substitution::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

FOTerm Substitution::apply(const FOTerm& t) const {
  if (t.is_variable()) {
    const FOTerm* bound = lookup(t.name);
    return bound ? *bound : t;
  }
  if (t.args.empty()) return t;
  FOTerm out = FOTerm::function(t.name, {});
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(apply(a));
  return out;
}

Atom Substitution::apply(const Atom& a) const {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(apply(t));
  return out;
}

Literal Substitution::apply(const Literal& l) const { return {apply(l.atom), l.annotation}; }

Clause Substitution::apply(const Clause& c) const {
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const auto& l : c.literals()) lits.push_back(apply(l));
  return Clause(std::move(lits));
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [var, t] : s1.bindings()) out.bind(var, s2.apply(t));
  for (const auto& [var, t] : s2.bindings()) {
    if (!s1.lookup(var)) out.bind(var, t);
  }
  return out;
}

bool occurs(const std::string& var, const FOTerm& t) {
  if (t.is_variable()) return t.name == var;
  for (const auto& a : t.args) {
    if (occurs(var, a)) return true;
  }
  return false;
}

namespace {

bool bind_var(const std::string& var, const FOTerm& t, Substitution& sigma) {
  if (t.is_variable() && t.name == var) return true;
  if (occurs(var, t)) return false;
  sigma = compose(sigma, Substitution::single(var, t));
  return true;
}

bool unify_into(const FOTerm& a, const FOTerm& b, Substitution& sigma) {
  const FOTerm s = sigma.apply(a);
  const FOTerm t = sigma.apply(b);
  if (s.is_variable()) return bind_var(s.name, t, sigma);
  if (t.is_variable()) return bind_var(t.name, s, sigma);
  if (s.name != t.name || s.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (!unify_into(s.args[i], t.args[i], sigma)) return false;
  }
  return true;
}

bool unify_atoms_into(const Atom& a, const Atom& b, Substitution& sigma) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!unify_into(a.args[i], b.args[i], sigma)) return false;
  }
  return true;
}

}  // namespace

std::optional<Substitution> mgu(const FOTerm& t1, const FOTerm& t2) {
  Substitution sigma;
  if (!unify_into(t1, t2, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> mgu(const Atom& a1, const Atom& a2) {
  Substitution sigma;
  if (!unify_atoms_into(a1, a2, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> mgu(std::span<const Atom> atoms) {
  Substitution sigma;
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (!unify_atoms_into(atoms[0], atoms[i], sigma)) return std::nullopt;
  }
  return sigma;
}

bool match(const FOTerm& pattern, const FOTerm& target, Matching& theta) {
  if (pattern.is_variable()) {
    auto [it, inserted] = theta.emplace(pattern.name, target);
    return inserted || it->second == target;
  }
  if (target.is_variable() || pattern.name != target.name || pattern.args.size() != target.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match(pattern.args[i], target.args[i], theta)) return false;
  }
  return true;
}

bool match(const Atom& pattern, const Atom& target, Matching& theta) {
  if (pattern.predicate != target.predicate || pattern.args.size() != target.args.size()) return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match(pattern.args[i], target.args[i], theta)) return false;
  }
  return true;
}

}  // namespace hedgeres
