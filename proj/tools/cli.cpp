#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hedgeres/errors.hpp"
#include "hedgeres/normalize.hpp"
#include "hedgeres/oracle.hpp"
#include "hedgeres/parser.hpp"
#include "hedgeres/printer.hpp"
#include "hedgeres/proof_io.hpp"
#include "hedgeres/saturate.hpp"

namespace hedgeres {

namespace {

constexpr int kUsage = 2;
constexpr int kProved = 10;
constexpr int kOpen = 20;
constexpr int kCapped = 30;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text << '\n';
}

struct Options {
  std::vector<std::string> files;
  std::string algebra_path;
  std::string strategy = "first";
  std::size_t max_clauses = 10000;
  std::size_t max_depth = 64;
  std::size_t max_atom_size = 256;
  std::string proof_path;
  std::string format = "text";
  std::size_t truth_depth = 2;
  std::size_t herbrand_level = 0;
  std::string mode = "strict";
  std::string interpretation_path;
};

Algebra load_algebra(const Options& o) {
  if (o.algebra_path.empty()) return Algebra::standard();
  return Algebra(parse_algebra(read_file(o.algebra_path)));
}

// Problem files are read in order and merged; they must agree on the algebra.
Problem load_problem(const std::vector<std::string>& files, const Algebra& algebra) {
  if (files.empty()) throw UsageError("no problem file given");
  std::optional<Problem> merged;
  for (const auto& path : files) {
    Problem p = [&] {
      try {
        return parse_problem(read_file(path), algebra);
      } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
      }
    }();
    if (!merged) {
      merged.emplace(std::move(p));
      continue;
    }
    if (!(p.algebra.config() == merged->algebra.config())) {
      throw ConfigError(path + ": algebra differs from the one of " + files.front());
    }
    for (const auto& s : p.order) {
      if (s.kind == Statement::Kind::Clause) {
        merged->order.push_back({s.kind, merged->clauses.size()});
        merged->clauses.push_back(p.clauses[s.index]);
      } else {
        merged->order.push_back({s.kind, merged->formulas.size()});
        merged->formulas.push_back(p.formulas[s.index]);
      }
    }
    for (auto& w : p.warnings) merged->warnings.push_back(path + ": " + w);
  }
  return std::move(*merged);
}

std::string paint(const std::string& text, const char* code, bool color) {
  return color ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
}

int cmd_compare(const Options& o, const std::string& lhs, const std::string& rhs, std::ostream& out) {
  const Algebra algebra = load_algebra(o);
  const auto order = algebra.compare(algebra.parse(lhs), algebra.parse(rhs));
  out << (order < 0 ? "<" : order > 0 ? ">" : "=") << '\n';
  return 0;
}

int cmd_refute(const Options& o, std::ostream& out, std::ostream& err, bool color) {
  const Algebra base = load_algebra(o);
  const Problem problem = load_problem(o.files, base);
  for (const auto& w : problem.warnings) err << "warning: " << w << '\n';
  SearchBudget budget;
  budget.max_clauses = o.max_clauses;
  budget.max_depth = o.max_depth;
  budget.max_atom_size = o.max_atom_size;
  budget.strategy = o.strategy == "best" ? Strategy::Best : Strategy::First;
  const SaturationResult result = saturate(clausify_problem(problem), budget, problem.algebra);
  for (const auto& w : result.warnings) err << "warning: " << w << '\n';

  if (result.proof && !o.proof_path.empty()) write_file(o.proof_path, proof_to_json(result, problem.algebra));
  if (o.format == "json") {
    out << proof_to_json(result, problem.algebra) << '\n';
  } else {
    switch (result.outcome) {
      case Outcome::Refuted:
        out << paint("refuted", "1;32", color) << " with reliability "
            << problem.algebra.format(result.proof->reliability()) << '\n';
        break;
      case Outcome::Saturated:
        out << paint("saturated", "1;33", color) << " without the empty clause\n";
        break;
      case Outcome::BudgetExhausted:
        out << paint("budget exhausted", "1;31", color) << '\n';
        break;
    }
    out << "derived " << result.derived << " clauses, " << result.given << " given\n";
    if (result.proof) out << proof_to_text(*result.proof, problem.algebra, color);
  }
  switch (result.outcome) {
    case Outcome::Refuted: return kProved;
    case Outcome::Saturated: return kOpen;
    case Outcome::BudgetExhausted: return kCapped;
  }
  return kCapped;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const Algebra base = load_algebra(o);
  const Problem problem = load_problem(o.files, base);
  for (const auto& w : problem.warnings) err << "warning: " << w << '\n';
  const Algebra& algebra = problem.algebra;
  const auto clauses = clausify_problem(problem);
  OracleOptions options;
  options.truth_depth = o.truth_depth;
  options.mode = o.mode == "weak" ? SatMode::Weak : SatMode::Strict;
  SatResult result;
  try {
    const HerbrandLevel universe = herbrand_universe(clauses, o.herbrand_level);
    result = check_sat(ground_clause_set(clauses, universe.terms), options, algebra);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    if (o.format == "json") out << R"({"result":"unknown","witness":null})" << '\n';
    return kCapped;
  }
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["result"] = result.satisfiable ? "sat" : "unsat";
    doc["witness"] = nullptr;
    if (result.witness) {
      doc["witness"] = nlohmann::ordered_json::object();
      for (const auto& [atom, value] : result.witness->atoms) doc["witness"][to_string(atom)] = algebra.format(value);
    }
    out << doc.dump(2) << '\n';
  } else if (result.satisfiable) {
    out << "SAT\n";
    for (const auto& [atom, value] : result.witness->atoms) out << to_string(atom) << '=' << algebra.format(value) << '\n';
  } else {
    out << "UNSAT\n";
  }
  return result.satisfiable ? kOpen : kProved;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  std::string interpretation_path = o.interpretation_path;
  for (const auto& f : o.files) {
    if (interpretation_path.empty() && f.ends_with(".json")) {
      interpretation_path = f;
    } else {
      files.push_back(f);
    }
  }
  if (interpretation_path.empty()) throw UsageError("eval needs an interpretation (.json)");
  const Algebra base = load_algebra(o);
  const Problem problem = load_problem(files, base);
  for (const auto& w : problem.warnings) err << "warning: " << w << '\n';
  const Algebra& algebra = problem.algebra;
  const Interpretation interpretation = parse_interpretation(read_file(interpretation_path), algebra);
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const auto& s : problem.order) {
    const TruthTerm value = s.kind == Statement::Kind::Clause
                                ? eval_formula(problem.clauses[s.index].clause, interpretation, algebra)
                                : eval_formula(problem.formulas[s.index].formula, interpretation, algebra);
    if (o.format == "json") {
      values.push_back(algebra.format(value));
    } else {
      out << algebra.format(value) << '\n';
    }
  }
  if (o.format == "json") out << values.dump() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Resolution prover for linguistic first-order logic over hedge algebras", "hedgeres"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> terms;

  auto add_algebra = [&o](CLI::App* cmd) {
    cmd->add_option("--algebra", o.algebra_path, "Algebra configuration (.hal)")->check(CLI::ExistingFile);
  };
  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* compare = app.add_subcommand("compare", "Compare two truth terms");
  compare->add_option("terms", terms, "Two truth terms")->required()->expected(2);
  add_algebra(compare);

  auto* refute = app.add_subcommand("refute", "Search for a refutation");
  refute->add_option("files", o.files, "Problem files (.lfol)")->required();
  add_algebra(refute);
  add_format(refute);
  refute->add_option("--strategy", o.strategy, "first or best")->check(CLI::IsMember({"first", "best"}));
  refute->add_option("--max-clauses", o.max_clauses, "Derived clause budget")->check(CLI::PositiveNumber);
  refute->add_option("--max-depth", o.max_depth, "Inference depth budget")->check(CLI::PositiveNumber);
  refute->add_option("--max-atom-size", o.max_atom_size, "Symbols allowed in one derived atom")
      ->check(CLI::PositiveNumber);
  refute->add_option("--proof", o.proof_path, "Write the proof as JSON");

  auto* oracle = app.add_subcommand("oracle", "Decide ground satisfiability by enumeration");
  oracle->add_option("files", o.files, "Problem files (.lfol)")->required();
  add_algebra(oracle);
  add_format(oracle);
  oracle->add_option("--truth-depth", o.truth_depth, "Hedge depth of the truth sample");
  oracle->add_option("--herbrand-level", o.herbrand_level, "Herbrand universe level used for grounding");
  oracle->add_option("--mode", o.mode, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));

  auto* eval = app.add_subcommand("eval", "Evaluate statements under an interpretation");
  eval->add_option("files", o.files, "Problem files and an interpretation (.json)")->required();
  eval->add_option("--interpretation", o.interpretation_path, "Interpretation (.json)")->check(CLI::ExistingFile);
  add_algebra(eval);
  add_format(eval);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*compare) return cmd_compare(o, terms[0], terms[1], out);
    if (*refute) return cmd_refute(o, out, err, color);
    if (*oracle) return cmd_oracle(o, out, err);
    return cmd_eval(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kUsage;
  }
}

}  // namespace hedgeres
