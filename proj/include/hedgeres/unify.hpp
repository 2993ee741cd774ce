#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "hedgeres/syntax.hpp"

namespace hedgeres {

/// Finite map from variable names to terms. Identity bindings are never
/// stored.
class Substitution {
 public:
  Substitution() = default;

  static Substitution single(std::string var, FOTerm t);

  void bind(std::string var, FOTerm t);
  const FOTerm* lookup(const std::string& var) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, FOTerm>& bindings() const { return bindings_; }

  FOTerm apply(const FOTerm& t) const;
  Atom apply(const Atom& a) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, FOTerm> bindings_;
};

/// apply(compose(s1, s2), t) == s2.apply(s1.apply(t)).
Substitution compose(const Substitution& s1, const Substitution& s2);

bool occurs(const std::string& var, const FOTerm& t);

/// Robinson unification with occurs check. The result is idempotent.
std::optional<Substitution> mgu(const FOTerm& t1, const FOTerm& t2);
std::optional<Substitution> mgu(const Atom& a1, const Atom& a2);
/// Simultaneous unifier of every atom in the list.
std::optional<Substitution> mgu(std::span<const Atom> atoms);

/// Variable assignment built by one-way matching. Unlike Substitution it
/// records x -> x, since that still pins x.
using Matching = std::map<std::string, FOTerm>;

/// Extends `theta` so that pattern·θ == target; false if impossible.
bool match(const FOTerm& pattern, const FOTerm& target, Matching& theta);
bool match(const Atom& pattern, const Atom& target, Matching& theta);

}  // namespace hedgeres
