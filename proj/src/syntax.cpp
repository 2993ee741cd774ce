#include "hedgeres/syntax.hpp"

#include <algorithm>
#include <cassert>

namespace hedgeres {

namespace {

std::strong_ordering compare_args(const std::vector<FOTerm>& a, const std::vector<FOTerm>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

bool FOTerm::is_ground() const {
  if (is_variable()) return false;
  return std::all_of(args.begin(), args.end(), [](const FOTerm& t) { return t.is_ground(); });
}

std::strong_ordering operator<=>(const FOTerm& a, const FOTerm& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  return compare_args(a.args, b.args);
}

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const FOTerm& t) { return t.is_ground(); });
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return compare_args(a.args, b.args);
}

Clause::Clause(std::vector<Literal> literals) {
  literals_.reserve(literals.size());
  for (auto& l : literals) {
    if (std::find(literals_.begin(), literals_.end(), l) == literals_.end()) {
      literals_.push_back(std::move(l));
    }
  }
}

bool Clause::is_ground() const {
  return std::all_of(literals_.begin(), literals_.end(),
                     [](const Literal& l) { return l.atom.is_ground(); });
}

bool same_literals(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return false;
  // Duplicates are collapsed, so inclusion one way suffices.
  return std::all_of(a.literals().begin(), a.literals().end(), [&](const Literal& l) {
    return std::find(b.literals().begin(), b.literals().end(), l) != b.literals().end();
  });
}

Formula Formula::lit(Literal l) {
  Formula f;
  f.kind = Kind::Lit;
  f.literal = std::move(l);
  return f;
}

Formula Formula::negation(Formula inner) {
  Formula f;
  f.kind = Kind::Not;
  f.operands.push_back(std::move(inner));
  return f;
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  Formula f;
  f.kind = kind;
  assert(f.is_binary());
  f.operands.push_back(std::move(lhs));
  f.operands.push_back(std::move(rhs));
  return f;
}

Formula Formula::quantified(Kind kind, std::string variable, Formula body) {
  Formula f;
  f.kind = kind;
  assert(f.is_quantifier());
  f.variable = std::move(variable);
  f.operands.push_back(std::move(body));
  return f;
}

bool Formula::is_binary() const {
  return kind == Kind::And || kind == Kind::Or || kind == Kind::Implies || kind == Kind::Iff;
}

void collect_vars(const FOTerm& t, VarSet& out) {
  if (t.is_variable()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

VarSet free_vars(const FOTerm& t) {
  VarSet out;
  collect_vars(t, out);
  return out;
}

VarSet free_vars(const Atom& a) {
  VarSet out;
  for (const auto& t : a.args) collect_vars(t, out);
  return out;
}

VarSet free_vars(const Literal& l) { return free_vars(l.atom); }

VarSet free_vars(const Clause& c) {
  VarSet out;
  for (const auto& l : c.literals()) {
    for (const auto& t : l.atom.args) collect_vars(t, out);
  }
  return out;
}

VarSet free_vars(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Lit: return free_vars(f.literal);
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: {
      VarSet body = free_vars(f.operands[0]);
      body.erase(f.variable);
      return body;
    }
    default: {
      VarSet out;
      for (const auto& op : f.operands) {
        VarSet sub = free_vars(op);
        out.insert(sub.begin(), sub.end());
      }
      return out;
    }
  }
}

}  // namespace hedgeres
