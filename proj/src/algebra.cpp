#include "hedgeres/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <set>

#include "hedgeres/errors.hpp"

namespace hedgeres {

namespace {

constexpr std::string_view kTop = "Top";
constexpr std::string_view kBottom = "Bot";
constexpr std::string_view kMiddle = "W";

int rank(const TruthTerm& t) {
  switch (t.kind()) {
    case TruthTerm::Kind::Bottom: return 0;
    case TruthTerm::Kind::Middle: return 2;
    case TruthTerm::Kind::Top: return 4;
    case TruthTerm::Kind::Linguistic: return t.generator() == Generator::Positive ? 3 : 1;
  }
  return 0;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

std::size_t TruthTermHash::operator()(const TruthTerm& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.kind()) * 31 + static_cast<std::size_t>(t.generator());
  for (HedgeId id : t.hedges()) h = h * 131 + id + 1;
  return h;
}

Algebra::Algebra(AlgebraConfig config) : config_(std::move(config)) {
  std::vector<std::string> names;
  auto add_name = [&](const std::string& name, std::string_view what) {
    if (!valid_name(name)) {
      throw ConfigError("invalid " + std::string(what) + " name '" + name +
                        "' (expected a capitalized alphanumeric identifier)");
    }
    if (name == kTop || name == kBottom || name == kMiddle) {
      throw ConfigError("'" + name + "' is reserved for a truth constant");
    }
    names.push_back(name);
  };
  add_name(config_.negative_generator, "generator");
  add_name(config_.positive_generator, "generator");
  if (config_.plus_hedges.empty()) throw ConfigError("positive hedge list is empty");
  if (config_.minus_hedges.empty()) throw ConfigError("negative hedge list is empty");
  for (const auto& h : config_.plus_hedges) add_name(h, "hedge");
  for (const auto& h : config_.minus_hedges) add_name(h, "hedge");
  if (names.size() > 255) throw ConfigError("too many hedges");

  // Truth terms are written as concatenated names, so decoding is only
  // unambiguous when no name is a prefix of another.
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (i == j) continue;
      if (names[j].compare(0, names[i].size(), names[i]) == 0) {
        if (names[i] == names[j]) throw ConfigError("duplicate name '" + names[i] + "'");
        throw ConfigError("name '" + names[i] + "' is a prefix of '" + names[j] +
                          "'; truth terms would be ambiguous");
      }
    }
  }

  for (std::size_t i = 0; i < config_.plus_hedges.size(); ++i) {
    hedges_.push_back({config_.plus_hedges[i], true, i});
  }
  for (std::size_t i = 0; i < config_.minus_hedges.size(); ++i) {
    hedges_.push_back({config_.minus_hedges[i], false, i});
  }

  const std::size_t n = hedges_.size();
  relation_.assign(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t h = 0; h < n; ++h) relation_[k * n + h] = hedges_[k].plus ? 1 : -1;
  }
  for (const auto& entry : config_.sign_entries) {
    auto k = find_hedge(entry.hedge);
    if (!k) throw ConfigError("sign entry names unknown hedge '" + entry.hedge + "'");
    if (entry.sign != 1 && entry.sign != -1) throw ConfigError("sign must be + or -");
    if (entry.relative_to.empty()) {
      for (std::size_t h = 0; h < n; ++h) relation_[*k * n + h] = entry.sign;
    } else {
      auto h = find_hedge(entry.relative_to);
      if (!h) throw ConfigError("sign entry names unknown hedge '" + entry.relative_to + "'");
      relation_[*k * n + *h] = entry.sign;
    }
  }

  // Compatible hedges move a term to the same side, converse hedges to
  // opposite sides. Both hold for every term only if, for each h, the
  // relation is constant on H+ and the negation of that on H-.
  for (std::size_t h = 0; h < n; ++h) {
    const int plus_sign = relation_[0 * n + h];
    for (std::size_t k = 0; k < n; ++k) {
      const int expected = hedges_[k].plus ? plus_sign : -plus_sign;
      if (relation_[k * n + h] != expected) {
        throw ConfigError("sign relation w.r.t. '" + hedges_[h].name +
                          "' is inconsistent: every positive hedge must share one sign and "
                          "every negative hedge the opposite one");
      }
    }
  }
}

AlgebraConfig Algebra::standard_config() {
  AlgebraConfig config;
  config.negative_generator = "False";
  config.positive_generator = "True";
  config.plus_hedges = {"M", "V"};
  config.minus_hedges = {"P", "L"};
  // Relative to P the roles flip: MorePossibleTrue sits above PossibleTrue
  // and LessPossibleTrue below it.
  config.sign_entries = {{"V", "P", -1}, {"M", "P", -1}, {"P", "P", 1}, {"L", "P", 1}};
  return config;
}

const Algebra& Algebra::standard() {
  static const Algebra algebra(standard_config());
  return algebra;
}

const std::string& Algebra::hedge_name(HedgeId id) const {
  if (id >= hedges_.size()) throw UsageError("hedge id out of range for this algebra");
  return hedges_[id].name;
}

std::optional<HedgeId> Algebra::find_hedge(std::string_view name) const {
  for (std::size_t i = 0; i < hedges_.size(); ++i) {
    if (hedges_[i].name == name) return static_cast<HedgeId>(i);
  }
  return std::nullopt;
}

bool Algebra::is_plus(HedgeId id) const {
  if (id >= hedges_.size()) throw UsageError("hedge id out of range for this algebra");
  return hedges_[id].plus;
}

std::size_t Algebra::strength(HedgeId id) const {
  if (id >= hedges_.size()) throw UsageError("hedge id out of range for this algebra");
  return hedges_[id].strength;
}

int Algebra::sign_relation(HedgeId k, HedgeId h) const {
  if (k >= hedges_.size() || h >= hedges_.size()) {
    throw UsageError("hedge id out of range for this algebra");
  }
  return relation_[k * hedges_.size() + h];
}

void Algebra::check(const TruthTerm& t) const {
  for (HedgeId id : t.hedges()) {
    if (id >= hedges_.size()) throw UsageError("truth term does not belong to this algebra");
  }
}

TruthTerm Algebra::canonicalize(std::span<const std::string> hedges, std::string_view base) const {
  std::vector<HedgeId> ids;
  ids.reserve(hedges.size());
  for (const auto& name : hedges) {
    auto id = find_hedge(name);
    if (!id) throw ConfigError("unknown hedge '" + name + "'");
    ids.push_back(*id);
  }
  // Hedges are fixpoints on the limit constants.
  if (base == kTop) return TruthTerm::top();
  if (base == kBottom) return TruthTerm::bottom();
  if (base == kMiddle) return TruthTerm::middle();
  if (base == config_.positive_generator) return TruthTerm::linguistic(std::move(ids), Generator::Positive);
  if (base == config_.negative_generator) return TruthTerm::linguistic(std::move(ids), Generator::Negative);
  throw ConfigError("unknown generator '" + std::string(base) + "'");
}

TruthTerm Algebra::parse(std::string_view text) const {
  if (text == kTop) return TruthTerm::top();
  if (text == kBottom) return TruthTerm::bottom();
  if (text == kMiddle) return TruthTerm::middle();
  std::vector<HedgeId> ids;
  std::string_view rest = text;
  while (!rest.empty()) {
    if (rest == config_.positive_generator) return TruthTerm::linguistic(std::move(ids), Generator::Positive);
    if (rest == config_.negative_generator) return TruthTerm::linguistic(std::move(ids), Generator::Negative);
    bool matched = false;
    for (std::size_t i = 0; i < hedges_.size(); ++i) {
      if (rest.substr(0, hedges_[i].name.size()) == hedges_[i].name) {
        ids.push_back(static_cast<HedgeId>(i));
        rest.remove_prefix(hedges_[i].name.size());
        matched = true;
        break;
      }
    }
    if (!matched) break;
  }
  throw ConfigError("unknown truth term '" + std::string(text) + "'");
}

std::string Algebra::format(const TruthTerm& t) const {
  switch (t.kind()) {
    case TruthTerm::Kind::Bottom: return std::string(kBottom);
    case TruthTerm::Kind::Middle: return std::string(kMiddle);
    case TruthTerm::Kind::Top: return std::string(kTop);
    case TruthTerm::Kind::Linguistic: break;
  }
  std::string out;
  for (HedgeId id : t.hedges()) out += hedge_name(id);
  out += t.generator() == Generator::Positive ? config_.positive_generator : config_.negative_generator;
  return out;
}

int Algebra::step_sign(HedgeId outer, const HedgeId* inner, int inner_sign, Generator g) const {
  if (inner == nullptr) {
    const int hedge = hedges_[outer].plus ? 1 : -1;
    return g == Generator::Positive ? hedge : -hedge;
  }
  return relation_[outer * hedges_.size() + *inner] * inner_sign;
}

int Algebra::sign(const TruthTerm& t) const {
  check(t);
  if (t.is_constant() || t.hedges().empty()) {
    throw UsageError("sign is defined only for hedged linguistic terms");
  }
  const auto& hs = t.hedges();
  int s = 0;
  const HedgeId* inner = nullptr;
  for (auto it = hs.rbegin(); it != hs.rend(); ++it) {
    s = step_sign(*it, inner, s, t.generator());
    inner = &*it;
  }
  return s;
}

std::strong_ordering Algebra::compare(const TruthTerm& x, const TruthTerm& y) const {
  check(x);
  check(y);
  const int rx = rank(x);
  const int ry = rank(y);
  if (rx != ry) return rx <=> ry;
  if (x.is_constant()) return std::strong_ordering::equal;

  // Same generator: walk the shared suffix z from the generator outward.
  const auto& xh = x.hedges();
  const auto& yh = y.hedges();
  const std::size_t n = xh.size();
  const std::size_t m = yh.size();
  const Generator g = x.generator();
  int z_sign = 0;
  const HedgeId* head = nullptr;
  std::size_t j = 0;
  while (j < n && j < m && xh[n - 1 - j] == yh[m - 1 - j]) {
    z_sign = step_sign(xh[n - 1 - j], head, z_sign, g);
    head = &xh[n - 1 - j];
    ++j;
  }
  if (j == n && j == m) return std::strong_ordering::equal;
  // Everything generated from h·z lies on the same side of z as h·z does.
  if (j == n) {
    return step_sign(yh[m - 1 - j], head, z_sign, g) > 0 ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
  }
  if (j == m) {
    return step_sign(xh[n - 1 - j], head, z_sign, g) > 0 ? std::strong_ordering::greater
                                                         : std::strong_ordering::less;
  }
  const HedgeId h = xh[n - 1 - j];
  const HedgeId k = yh[m - 1 - j];
  const int sh = step_sign(h, head, z_sign, g);
  const int sk = step_sign(k, head, z_sign, g);
  if (sh != sk) return sh > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  assert(hedges_[h].plus == hedges_[k].plus);
  // Same direction: the stronger hedge moves further.
  const bool x_further = hedges_[h].strength > hedges_[k].strength;
  if (x_further == (sh > 0)) return std::strong_ordering::greater;
  return std::strong_ordering::less;
}

TruthTerm Algebra::negate(const TruthTerm& x) const {
  check(x);
  switch (x.kind()) {
    case TruthTerm::Kind::Bottom: return TruthTerm::top();
    case TruthTerm::Kind::Top: return TruthTerm::bottom();
    case TruthTerm::Kind::Middle: return TruthTerm::middle();
    case TruthTerm::Kind::Linguistic: break;
  }
  return TruthTerm::linguistic(x.hedges(), x.generator() == Generator::Positive ? Generator::Negative
                                                                                 : Generator::Positive);
}

TruthTerm Algebra::meet(const TruthTerm& x, const TruthTerm& y) const {
  return compare(x, y) <= 0 ? x : y;
}

TruthTerm Algebra::join(const TruthTerm& x, const TruthTerm& y) const {
  return compare(x, y) >= 0 ? x : y;
}

TruthTerm Algebra::implies(const TruthTerm& x, const TruthTerm& y) const {
  return join(negate(x), y);
}

TruthTerm Algebra::iff(const TruthTerm& x, const TruthTerm& y) const {
  return meet(implies(x, y), implies(y, x));
}

std::vector<TruthTerm> Algebra::enumerate_terms(std::size_t max_depth) const {
  std::vector<TruthTerm> out = {TruthTerm::bottom(), TruthTerm::middle(), TruthTerm::top()};
  std::vector<std::vector<HedgeId>> layer = {{}};
  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    for (const auto& hs : layer) {
      out.push_back(TruthTerm::linguistic(hs, Generator::Negative));
      out.push_back(TruthTerm::linguistic(hs, Generator::Positive));
    }
    if (depth == max_depth) break;
    std::vector<std::vector<HedgeId>> next;
    next.reserve(layer.size() * hedges_.size());
    for (const auto& hs : layer) {
      for (std::size_t id = 0; id < hedges_.size(); ++id) {
        std::vector<HedgeId> extended;
        extended.reserve(hs.size() + 1);
        extended.push_back(static_cast<HedgeId>(id));
        extended.insert(extended.end(), hs.begin(), hs.end());
        next.push_back(std::move(extended));
      }
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [this](const TruthTerm& a, const TruthTerm& b) { return less(a, b); });
  return out;
}

}  // namespace hedgeres
