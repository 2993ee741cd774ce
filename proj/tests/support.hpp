#pragma once

// Shared test helpers: an independent numeric model of the truth order, a
// small JSON-schema checker, and parsing shortcuts.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hedgeres/algebra.hpp"
#include "hedgeres/parser.hpp"
#include "hedgeres/syntax.hpp"

namespace testing {

using namespace hedgeres;

inline const Algebra& std_alg() { return Algebra::standard(); }

inline TruthTerm tt(const std::string& text) { return std_alg().parse(text); }

inline std::vector<AnnotatedClause> clauses_of(const std::string& text, const Algebra& algebra = std_alg()) {
  return parse_problem(text, algebra).clauses;
}

inline AnnotatedClause clause_of(const std::string& body, const Algebra& algebra = std_alg()) {
  return clauses_of("clause " + body + ".", algebra).at(0);
}

/// Places every truth term on the real line by nested intervals: the
/// interval of x is cut into one slot per hedge plus one for x itself, with
/// the children hx that lie below x (stronger ones further out) to the left
/// of x and the ones above x to the right. Whether hx lies above x follows
/// the sign rule on hedge polarities and the config's relation table only;
/// no Algebra::compare is involved.
class NumericOrder {
 public:
  explicit NumericOrder(const Algebra& algebra) : algebra_(algebra), config_(algebra.config()) {}

  int polarity(const std::string& hedge) const {
    return std::find(config_.plus_hedges.begin(), config_.plus_hedges.end(), hedge) != config_.plus_hedges.end()
               ? 1
               : -1;
  }

  std::size_t strength(const std::string& hedge) const {
    const auto& list = polarity(hedge) > 0 ? config_.plus_hedges : config_.minus_hedges;
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), hedge) - list.begin());
  }

  int relation(const std::string& k, const std::string& h) const {
    int r = polarity(k);
    for (const auto& e : config_.sign_entries) {
      if (e.hedge == k && (e.relative_to.empty() || e.relative_to == h)) r = e.sign;
    }
    return r;
  }

  double value(const TruthTerm& t) const {
    switch (t.kind()) {
      case TruthTerm::Kind::Bottom: return -1.0;
      case TruthTerm::Kind::Middle: return 0.5;
      case TruthTerm::Kind::Top: return 2.0;
      case TruthTerm::Kind::Linguistic: break;
    }
    std::vector<std::string> all = config_.plus_hedges;
    all.insert(all.end(), config_.minus_hedges.begin(), config_.minus_hedges.end());
    const bool positive = t.generator() == Generator::Positive;
    double lo = positive ? 0.5 : 0.0;
    double hi = positive ? 1.0 : 0.5;
    std::string head;  // empty while at the generator
    int sign = positive ? 1 : -1;
    auto child_sign = [&](const std::string& k) { return head.empty() ? polarity(k) * sign : relation(k, head) * sign; };
    auto cut = [&](const std::string* pick) {
      std::vector<std::string> below;
      std::vector<std::string> above;
      for (const auto& k : all) (child_sign(k) < 0 ? below : above).push_back(k);
      std::sort(below.begin(), below.end(), [&](auto& a, auto& b) { return strength(a) > strength(b); });
      std::sort(above.begin(), above.end(), [&](auto& a, auto& b) { return strength(a) < strength(b); });
      std::vector<std::string> slots = below;
      slots.push_back("");
      slots.insert(slots.end(), above.begin(), above.end());
      const std::string target = pick ? *pick : "";
      const std::size_t index = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), target) - slots.begin());
      const double width = (hi - lo) / static_cast<double>(slots.size());
      lo += width * static_cast<double>(index);
      hi = lo + width;
    };
    const auto& hedges = t.hedges();
    for (auto it = hedges.rbegin(); it != hedges.rend(); ++it) {
      const std::string name = algebra_.hedge_name(*it);
      const int s = child_sign(name);
      cut(&name);
      head = name;
      sign = s;
    }
    cut(nullptr);
    return (lo + hi) / 2.0;
  }

  int compare(const TruthTerm& x, const TruthTerm& y) const {
    const double a = value(x);
    const double b = value(y);
    return a < b ? -1 : (a > b ? 1 : 0);
  }

 private:
  const Algebra& algebra_;
  const AlgebraConfig& config_;
};

/// The four-case literal value computed on numeric positions; negation is
/// reflection about W.
inline double numeric_literal(double atom, double annotation) {
  auto neg = [](double v) { return 1.0 - v; };
  const bool high1 = atom > 0.5;
  const bool high2 = annotation > 0.5;
  if (high1 && high2) return std::min(atom, annotation);
  if (!high1 && !high2) return neg(std::max(atom, annotation));
  if (high1) return std::max(neg(atom), annotation);
  return std::max(atom, neg(annotation));
}

/// Checks the subset of JSON Schema used by docs/proof.schema.json. Returns
/// an empty string on success, otherwise the first violation.
inline std::string schema_violation(const nlohmann::json& schema, const nlohmann::json& value,
                                    const std::string& path = "$") {
  if (schema.contains("type")) {
    std::vector<std::string> types;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) types.push_back(t.get<std::string>());
    } else {
      types.push_back(schema["type"].get<std::string>());
    }
    auto is = [&value](const std::string& type) {
      if (type == "null") return value.is_null();
      if (type == "string") return value.is_string();
      if (type == "integer") return value.is_number_integer();
      if (type == "number") return value.is_number();
      if (type == "object") return value.is_object();
      if (type == "array") return value.is_array();
      if (type == "boolean") return value.is_boolean();
      return false;
    };
    if (std::none_of(types.begin(), types.end(), is)) return path + ": wrong type";
  }
  if (schema.contains("enum")) {
    const auto& options = schema["enum"];
    if (std::find(options.begin(), options.end(), value) == options.end()) return path + ": not in enum";
  }
  if (schema.contains("minimum") && value.is_number() && value.get<double>() < schema["minimum"].get<double>()) {
    return path + ": below minimum";
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) return path + ": missing " + key.get<std::string>();
      }
    }
    for (const auto& [key, member] : value.items()) {
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        if (auto v = schema_violation(schema["properties"][key], member, path + "." + key); !v.empty()) return v;
      } else if (schema.contains("additionalProperties")) {
        const auto& extra = schema["additionalProperties"];
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) return path + ": unexpected " + key;
        } else if (auto v = schema_violation(extra, member, path + "." + key); !v.empty()) {
          return v;
        }
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) return path + ": too short";
    if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>()) return path + ": too long";
    if (schema.contains("items")) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (auto v = schema_violation(schema["items"], value[i], path + "[" + std::to_string(i) + "]"); !v.empty()) {
          return v;
        }
      }
    }
  }
  return {};
}

inline nlohmann::json proof_schema() {
  std::ifstream in(std::string(HEDGERES_SOURCE_DIR) + "/docs/proof.schema.json");
  return nlohmann::json::parse(in);
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string source_path(const std::string& relative) { return std::string(HEDGERES_SOURCE_DIR) + "/" + relative; }

}  // namespace testing
