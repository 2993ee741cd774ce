#include "hedgeres/printer.hpp"

namespace hedgeres {

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists: return 0;
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    case Formula::Kind::Lit: return 6;
  }
  return 6;
}

const char* op_symbol(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Iff: return " <-> ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::And: return " & ";
    default: return "";
  }
}

void print_formula(const Formula& f, const Algebra& algebra, int min_prec, std::string& out) {
  const int prec = precedence(f.kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind) {
    case Formula::Kind::Lit:
      out += to_string(f.literal, algebra);
      break;
    case Formula::Kind::Not:
      out += '~';
      print_formula(f.operands[0], algebra, prec, out);
      break;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      out += f.kind == Formula::Kind::ForAll ? "forall ?" : "exists ?";
      out += f.variable;
      out += " . ";
      print_formula(f.operands[0], algebra, 0, out);
      break;
    default: {
      const bool right_assoc = f.kind == Formula::Kind::Implies;
      print_formula(f.operands[0], algebra, right_assoc ? prec + 1 : prec, out);
      out += op_symbol(f.kind);
      print_formula(f.operands[1], algebra, right_assoc ? prec : prec + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

void print_term(const FOTerm& t, std::string& out) {
  if (t.is_variable()) {
    out += '?';
    out += t.name;
    return;
  }
  out += t.name;
  if (t.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i > 0) out += ", ";
    print_term(t.args[i], out);
  }
  out += ')';
}

}  // namespace

std::string to_string(const FOTerm& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Atom& a) {
  std::string out = a.predicate;
  if (a.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    print_term(a.args[i], out);
  }
  out += ')';
  return out;
}

std::string to_string(const Literal& l, const Algebra& algebra) {
  return to_string(l.atom) + ":" + algebra.format(l.annotation);
}

std::string to_string(const Clause& c, const Algebra& algebra) {
  if (c.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += " | ";
    out += to_string(c[i], algebra);
  }
  return out;
}

std::string to_string(const AnnotatedClause& c, const Algebra& algebra) {
  return "(" + to_string(c.clause, algebra) + ", " + algebra.format(c.reliability) + ")";
}

std::string to_string(const Formula& f, const Algebra& algebra) {
  std::string out;
  print_formula(f, algebra, 0, out);
  return out;
}

std::string format_algebra(const AlgebraConfig& config) {
  auto chain = [](const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0) out += " < ";
      out += names[i];
    }
    return out;
  };
  std::string out = "algebra {\n";
  out += "  generators: " + config.negative_generator + ", " + config.positive_generator + "\n";
  out += "  positive: " + chain(config.plus_hedges) + "\n";
  out += "  negative: " + chain(config.minus_hedges) + "\n";
  if (!config.sign_entries.empty()) {
    out += "  sign {";
    for (const auto& e : config.sign_entries) {
      out += " " + e.hedge + ":" + (e.sign > 0 ? "+" : "-") +
             (e.relative_to.empty() ? std::string("*") : e.relative_to);
    }
    out += " }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hedgeres
