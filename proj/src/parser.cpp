#include "hedgeres/parser.hpp"

#include <cctype>
#include <map>

#include "hedgeres/errors.hpp"
#include "hedgeres/printer.hpp"

namespace hedgeres {

namespace {

enum class Tok {
  Ident, Var, LParen, RParen, Comma, Colon, Bar, Amp, Tilde, Arrow, DArrow,
  Dot, At, LBrace, RBrace, Lt, Plus, Minus, Star, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '?') {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      if (j == i + 1) throw ParseError("expected variable name after '?'", tl, tc);
      out.push_back({Tok::Var, std::string(text.substr(i + 1, j - i - 1)), tl, tc});
      advance(j - i);
      continue;
    }
    auto rest = text.substr(i);
    if (rest.starts_with("<->")) {
      out.push_back({Tok::DArrow, "<->", tl, tc});
      advance(3);
      continue;
    }
    if (rest.starts_with("->")) {
      out.push_back({Tok::Arrow, "->", tl, tc});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case '|': kind = Tok::Bar; break;
      case '&': kind = Tok::Amp; break;
      case '~': kind = Tok::Tilde; break;
      case '.': kind = Tok::Dot; break;
      case '@': kind = Tok::At; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '<': kind = Tok::Lt; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
    }
    out.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Var: return "variable";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Bar: return "'|'";
    case Tok::Amp: return "'&'";
    case Tok::Tilde: return "'~'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::Dot: return "'.'";
    case Tok::At: return "'@'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Lt: return "'<'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool is_keyword(std::string_view s) {
  return s == "clause" || s == "formula" || s == "algebra" || s == "forall" || s == "exists";
}

bool is_skolem_name(std::string_view s) {
  if (s.size() < 3 || !s.starts_with("sk")) return false;
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word) const { return at(Tok::Ident) && peek().text == word; }

  const Token& expect(Tok kind, const char* context) {
    if (!at(kind)) fail(std::string("expected ") + describe(kind) + " " + context);
    return tokens_[pos_++];
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }

  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    std::string where = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + " (at " + where + ")", t.line, t.column);
  }

  AlgebraConfig algebra_block() {
    const Token& start = peek();
    if (!at_word("algebra")) fail("expected 'algebra'");
    ++pos_;
    expect(Tok::LBrace, "after 'algebra'");
    AlgebraConfig config;
    config.plus_hedges.clear();
    config.minus_hedges.clear();
    bool seen_positive = false;
    bool seen_negative = false;
    while (!accept(Tok::RBrace)) {
      const Token& section = expect(Tok::Ident, "naming an algebra section");
      if (section.text == "generators") {
        expect(Tok::Colon, "after 'generators'");
        config.negative_generator = expect(Tok::Ident, "(negative generator)").text;
        expect(Tok::Comma, "between generators");
        config.positive_generator = expect(Tok::Ident, "(positive generator)").text;
      } else if (section.text == "positive" || section.text == "negative") {
        auto& list = section.text == "positive" ? config.plus_hedges : config.minus_hedges;
        (section.text == "positive" ? seen_positive : seen_negative) = true;
        expect(Tok::Colon, "after hedge section name");
        list.push_back(expect(Tok::Ident, "(hedge name)").text);
        while (accept(Tok::Lt)) list.push_back(expect(Tok::Ident, "(hedge name)").text);
      } else if (section.text == "sign") {
        expect(Tok::LBrace, "after 'sign'");
        while (!accept(Tok::RBrace)) {
          SignEntry entry;
          entry.hedge = expect(Tok::Ident, "(hedge in sign entry)").text;
          expect(Tok::Colon, "in sign entry");
          if (accept(Tok::Plus)) {
            entry.sign = 1;
          } else if (accept(Tok::Minus)) {
            entry.sign = -1;
          } else {
            fail("expected '+' or '-' in sign entry");
          }
          if (!accept(Tok::Star)) entry.relative_to = expect(Tok::Ident, "or '*' in sign entry").text;
          config.sign_entries.push_back(std::move(entry));
        }
      } else {
        fail_at(section, "unknown algebra section '" + section.text + "'");
      }
    }
    if (!seen_positive || !seen_negative) {
      fail_at(start, "algebra block needs both 'positive' and 'negative' sections");
    }
    try {
      Algebra check(config);
    } catch (const ConfigError& e) {
      fail_at(start, std::string("invalid algebra: ") + e.what());
    }
    return config;
  }

  FOTerm term() {
    if (at(Tok::Var)) return FOTerm::variable(tokens_[pos_++].text);
    const Token& name = expect(Tok::Ident, "(term)");
    if (!std::islower(static_cast<unsigned char>(name.text.front())) || is_keyword(name.text)) {
      fail_at(name, "expected a variable, constant or function symbol");
    }
    if (is_skolem_name(name.text)) fail_at(name, "symbol '" + name.text + "' is reserved for Skolem functions");
    std::vector<FOTerm> args;
    if (accept(Tok::LParen)) {
      args.push_back(term());
      while (accept(Tok::Comma)) args.push_back(term());
      expect(Tok::RParen, "closing argument list");
    }
    check_arity(function_arity_, name, args.size(), "function");
    return FOTerm::function(name.text, std::move(args));
  }

  Atom atom() {
    const Token& name = expect(Tok::Ident, "(predicate)");
    if (!std::isupper(static_cast<unsigned char>(name.text.front()))) {
      fail_at(name, "predicate symbols must be capitalized");
    }
    Atom a;
    a.predicate = name.text;
    if (accept(Tok::LParen)) {
      a.args.push_back(term());
      while (accept(Tok::Comma)) a.args.push_back(term());
      expect(Tok::RParen, "closing argument list");
    }
    check_arity(predicate_arity_, name, a.args.size(), "predicate");
    return a;
  }

  TruthTerm truth_term(const Algebra& algebra) {
    const Token& t = expect(Tok::Ident, "(truth term)");
    try {
      return algebra.parse(t.text);
    } catch (const ConfigError&) {
      fail_at(t, "unknown truth term '" + t.text + "'");
    }
  }

  Literal literal(const Algebra& algebra) {
    Literal l;
    l.atom = atom();
    expect(Tok::Colon, "between atom and truth term");
    l.annotation = truth_term(algebra);
    return l;
  }

  TruthTerm reliability(const Algebra& algebra) {
    if (!accept(Tok::At)) return TruthTerm::top();
    const Token& t = peek();
    TruthTerm r = truth_term(algebra);
    if (algebra.less(r, TruthTerm::middle())) fail_at(t, "reliability must not be below W");
    return r;
  }

  Formula expr(const Algebra& algebra) {
    Formula lhs = implication(algebra);
    while (accept(Tok::DArrow)) {
      lhs = Formula::binary(Formula::Kind::Iff, std::move(lhs), implication(algebra));
    }
    return lhs;
  }

  Formula implication(const Algebra& algebra) {
    Formula lhs = disjunction(algebra);
    if (accept(Tok::Arrow)) {
      return Formula::binary(Formula::Kind::Implies, std::move(lhs), implication(algebra));
    }
    return lhs;
  }

  Formula disjunction(const Algebra& algebra) {
    Formula lhs = conjunction(algebra);
    while (accept(Tok::Bar)) lhs = Formula::binary(Formula::Kind::Or, std::move(lhs), conjunction(algebra));
    return lhs;
  }

  Formula conjunction(const Algebra& algebra) {
    Formula lhs = unary(algebra);
    while (accept(Tok::Amp)) lhs = Formula::binary(Formula::Kind::And, std::move(lhs), unary(algebra));
    return lhs;
  }

  Formula unary(const Algebra& algebra) {
    if (accept(Tok::Tilde)) return Formula::negation(unary(algebra));
    if (accept(Tok::LParen)) {
      Formula inner = expr(algebra);
      expect(Tok::RParen, "closing parenthesis");
      return inner;
    }
    if (at_word("forall") || at_word("exists")) {
      const auto kind = peek().text == "forall" ? Formula::Kind::ForAll : Formula::Kind::Exists;
      ++pos_;
      const Token& var = expect(Tok::Var, "after quantifier");
      expect(Tok::Dot, "after quantified variable");
      Formula body = expr(algebra);
      if (!free_vars(body).contains(var.text)) {
        warnings_.push_back(std::to_string(var.line) + ":" + std::to_string(var.column) +
                            ": quantified variable ?" + var.text + " does not occur free in its body");
      }
      return Formula::quantified(kind, var.text, std::move(body));
    }
    return Formula::lit(literal(algebra));
  }

  void problem(Problem& out) {
    if (at_word("algebra")) {
      const Token& start = peek();
      AlgebraConfig config = algebra_block();
      try {
        out.algebra = Algebra(std::move(config));
      } catch (const ConfigError& e) {
        fail_at(start, e.what());
      }
      out.inline_algebra = true;
    }
    const Algebra& algebra = out.algebra;
    while (!at(Tok::End)) {
      if (at_word("clause")) {
        ++pos_;
        std::vector<Literal> lits;
        lits.push_back(literal(algebra));
        while (accept(Tok::Bar)) lits.push_back(literal(algebra));
        AnnotatedClause c{Clause(std::move(lits)), reliability(algebra)};
        expect(Tok::Dot, "ending clause");
        out.order.push_back({Statement::Kind::Clause, out.clauses.size()});
        out.clauses.push_back(std::move(c));
      } else if (at_word("formula")) {
        ++pos_;
        FormulaStatement s;
        s.formula = expr(algebra);
        s.reliability = reliability(algebra);
        expect(Tok::Dot, "ending formula");
        out.order.push_back({Statement::Kind::Formula, out.formulas.size()});
        out.formulas.push_back(std::move(s));
      } else if (at_word("algebra")) {
        fail("the algebra block must come before all statements");
      } else {
        fail("expected 'clause' or 'formula'");
      }
    }
    out.warnings = std::move(warnings_);
  }

  void expect_end() {
    if (!at(Tok::End)) fail("unexpected trailing input");
  }

 private:
  void check_arity(std::map<std::string, std::size_t>& table, const Token& name, std::size_t arity,
                   const char* what) {
    auto [it, inserted] = table.emplace(name.text, arity);
    if (!inserted && it->second != arity) {
      fail_at(name, std::string(what) + " '" + name.text + "' used with arity " + std::to_string(arity) +
                        " but earlier with arity " + std::to_string(it->second));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> predicate_arity_;
  std::map<std::string, std::size_t> function_arity_;
  std::vector<std::string> warnings_;
};

}  // namespace

Problem parse_problem(std::string_view text, const Algebra& algebra) {
  Problem problem(algebra);
  Parser parser(text);
  parser.problem(problem);
  return problem;
}

AlgebraConfig parse_algebra(std::string_view text) {
  Parser parser(text);
  AlgebraConfig config = parser.algebra_block();
  parser.expect_end();
  return config;
}

FOTerm parse_term(std::string_view text) {
  Parser parser(text);
  FOTerm t = parser.term();
  parser.expect_end();
  return t;
}

std::vector<FOTerm> parse_term_list(std::string_view text) {
  Parser parser(text);
  std::vector<FOTerm> out;
  if (parser.at(Tok::End)) return out;
  out.push_back(parser.term());
  while (parser.accept(Tok::Comma)) out.push_back(parser.term());
  parser.expect_end();
  return out;
}

Atom parse_atom(std::string_view text) {
  Parser parser(text);
  Atom a = parser.atom();
  parser.expect_end();
  return a;
}

std::string format_problem(const Problem& problem) {
  const Algebra& algebra = problem.algebra;
  std::string out;
  if (problem.inline_algebra) out += format_algebra(algebra.config());
  auto suffix = [&](const TruthTerm& reliability) {
    return reliability == TruthTerm::top() ? std::string(".") : " @ " + algebra.format(reliability) + ".";
  };
  for (const auto& s : problem.order) {
    if (s.kind == Statement::Kind::Clause) {
      const auto& c = problem.clauses[s.index];
      out += "clause " + to_string(c.clause, algebra) + suffix(c.reliability) + "\n";
    } else {
      const auto& f = problem.formulas[s.index];
      out += "formula " + to_string(f.formula, algebra) + suffix(f.reliability) + "\n";
    }
  }
  return out;
}

}  // namespace hedgeres
