#pragma once

#include <string>

#include "hedgeres/algebra.hpp"
#include "hedgeres/syntax.hpp"

namespace hedgeres {

std::string to_string(const FOTerm& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l, const Algebra& algebra);
/// `A(?x):MFalse | C(?x):PTrue`, or `[]` for the empty clause.
std::string to_string(const Clause& c, const Algebra& algebra);
/// `(C, α)`
std::string to_string(const AnnotatedClause& c, const Algebra& algebra);
/// Minimal parentheses under ~ > & > | > -> > <->, `->` right-associative.
std::string to_string(const Formula& f, const Algebra& algebra);

/// An `algebra { ... }` block that parses back to an equal config.
std::string format_algebra(const AlgebraConfig& config);

}  // namespace hedgeres
