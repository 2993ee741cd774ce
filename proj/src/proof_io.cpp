#include "hedgeres/proof_io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "hedgeres/printer.hpp"

namespace hedgeres {

namespace {

using Json = nlohmann::ordered_json;

Json substitution_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [var, t] : s.bindings()) out[var] = to_string(t);
  return out;
}

std::string substitution_text(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, t] : s.bindings()) {
    out += (first ? "?" : ", ?") + var + " -> " + to_string(t);
    first = false;
  }
  return out + "}";
}

const char* outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Refuted: return "unsat";
    case Outcome::Saturated: return "sat";
    case Outcome::BudgetExhausted: return "unknown";
  }
  return "unknown";
}

void render(const ProofTree& proof, std::size_t id, std::size_t indent, const Algebra& algebra, bool color,
            std::set<std::size_t>& shown, std::ostringstream& out) {
  const ProofNode& node = proof.node(id);
  out << std::string(indent * 2, ' ') << '#' << id << ' ';
  if (shown.contains(id)) {
    out << "(shown above)\n";
    return;
  }
  shown.insert(id);
  out << to_string(node.clause, algebra) << "  ";
  if (color) out << "\x1b[1m";
  out << rule_name(node.rule);
  if (color) out << "\x1b[0m";
  if (node.rule == Rule::Resolve) {
    out << " #" << node.premises[0] << '.' << node.resolved->first << " #" << node.premises[1] << '.'
        << node.resolved->second;
    if (!node.renaming.empty()) out << " renaming " << substitution_text(node.renaming);
  } else if (node.rule == Rule::Factor) {
    out << " #" << node.premises[0];
    for (std::size_t i = 0; i < node.factored.size(); ++i) out << (i ? ',' : '.') << node.factored[i];
  }
  if (node.rule != Rule::Input) out << ' ' << substitution_text(node.substitution);
  out << '\n';
  for (std::size_t p : node.premises) render(proof, p, indent + 1, algebra, color, shown, out);
}

}  // namespace

std::string proof_to_json(const SaturationResult& result, const Algebra& algebra) {
  Json doc;
  doc["result"] = outcome_name(result.outcome);
  if (!result.proof) {
    doc["reliability"] = nullptr;
    doc["nodes"] = Json::array();
    doc["root"] = nullptr;
    return doc.dump(2);
  }
  const ProofTree& proof = *result.proof;
  doc["reliability"] = algebra.format(proof.reliability());
  doc["nodes"] = Json::array();
  for (const auto& node : proof.nodes) {
    Json n;
    n["id"] = node.id;
    n["rule"] = rule_name(node.rule);
    n["clause"] = to_string(node.clause.clause, algebra);
    n["rel"] = algebra.format(node.clause.reliability);
    n["premises"] = node.premises;
    n["subst"] = substitution_json(node.substitution);
    if (node.rule == Rule::Resolve) {
      n["resolved"] = {node.resolved->first, node.resolved->second};
      n["renamed"] = substitution_json(node.renaming);
    } else if (node.rule == Rule::Factor) {
      n["factored"] = node.factored;
    }
    doc["nodes"].push_back(std::move(n));
  }
  doc["root"] = proof.root;
  return doc.dump(2);
}

std::string proof_to_text(const ProofTree& proof, const Algebra& algebra, bool color) {
  std::ostringstream out;
  std::set<std::size_t> shown;
  render(proof, proof.root, 0, algebra, color, shown, out);
  return out.str();
}

}  // namespace hedgeres
