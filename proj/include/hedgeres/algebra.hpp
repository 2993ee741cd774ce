#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hedgeres {

using HedgeId = std::uint8_t;

enum class Generator : std::uint8_t { Negative, Positive };

/// A linguistic truth value: one of the constants Bot < W < Top, or a hedge
/// string applied to a generator. Hedges are stored outermost first, so
/// `VMTrue` is {V, M} over the positive generator.
///
/// TruthTerm carries no order of its own; the semantic order lives in
/// Algebra::compare.
class TruthTerm {
 public:
  enum class Kind : std::uint8_t { Bottom, Linguistic, Middle, Top };

  TruthTerm() = default;

  static TruthTerm bottom() { return TruthTerm(Kind::Bottom); }
  static TruthTerm middle() { return TruthTerm(Kind::Middle); }
  static TruthTerm top() { return TruthTerm(Kind::Top); }
  static TruthTerm linguistic(std::vector<HedgeId> hedges, Generator generator) {
    TruthTerm t(Kind::Linguistic);
    t.hedges_ = std::move(hedges);
    t.generator_ = generator;
    return t;
  }

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ != Kind::Linguistic; }
  Generator generator() const { return generator_; }
  const std::vector<HedgeId>& hedges() const { return hedges_; }

  friend bool operator==(const TruthTerm&, const TruthTerm&) = default;

 private:
  explicit TruthTerm(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Middle;
  Generator generator_ = Generator::Positive;
  std::vector<HedgeId> hedges_;
};

struct TruthTermHash {
  std::size_t operator()(const TruthTerm& t) const noexcept;
};

struct SignEntry {
  std::string hedge;        // k
  std::string relative_to;  // h; empty means every hedge
  int sign = 1;             // +1: k is positive w.r.t. h

  friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

/// Raw description of a linear symmetrical hedge algebra, as read from a
/// `.hal` file. Algebra validates it.
struct AlgebraConfig {
  std::string negative_generator = "False";
  std::string positive_generator = "True";
  std::vector<std::string> plus_hedges;   // ascending strength
  std::vector<std::string> minus_hedges;  // ascending strength
  // Applied in order on top of the default relation rel(k, h) = +1 iff k is
  // a plus hedge.
  std::vector<SignEntry> sign_entries;

  friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;
};

/// The linguistic truth domain of a free lin-HA together with its order and
/// Gödel connectives. Immutable after construction.
class Algebra {
 public:
  explicit Algebra(AlgebraConfig config);

  /// False/True with H+ = {M < V}, H- = {P < L}.
  static const Algebra& standard();
  static AlgebraConfig standard_config();

  const AlgebraConfig& config() const { return config_; }

  std::size_t hedge_count() const { return hedges_.size(); }
  const std::string& hedge_name(HedgeId id) const;
  std::optional<HedgeId> find_hedge(std::string_view name) const;
  bool is_plus(HedgeId id) const;
  // Position in its subset's ascending strength list.
  std::size_t strength(HedgeId id) const;
  // +1 if k is positive w.r.t. h, -1 if negative.
  int sign_relation(HedgeId k, HedgeId h) const;

  TruthTerm canonicalize(std::span<const std::string> hedges, std::string_view base) const;
  TruthTerm parse(std::string_view text) const;
  std::string format(const TruthTerm& t) const;
  TruthTerm generator(Generator g) const { return TruthTerm::linguistic({}, g); }

  /// +1 if the outermost hedge moved the term up relative to its suffix.
  int sign(const TruthTerm& t) const;
  std::strong_ordering compare(const TruthTerm& x, const TruthTerm& y) const;

  bool less(const TruthTerm& x, const TruthTerm& y) const { return compare(x, y) < 0; }
  bool less_equal(const TruthTerm& x, const TruthTerm& y) const { return compare(x, y) <= 0; }
  bool above_middle(const TruthTerm& x) const { return compare(x, TruthTerm::middle()) > 0; }

  TruthTerm negate(const TruthTerm& x) const;
  TruthTerm meet(const TruthTerm& x, const TruthTerm& y) const;
  TruthTerm join(const TruthTerm& x, const TruthTerm& y) const;
  TruthTerm implies(const TruthTerm& x, const TruthTerm& y) const;
  TruthTerm iff(const TruthTerm& x, const TruthTerm& y) const;

  /// Every term with at most max_depth hedges plus the three constants,
  /// sorted ascending.
  std::vector<TruthTerm> enumerate_terms(std::size_t max_depth) const;

 private:
  struct HedgeInfo {
    std::string name;
    bool plus;
    std::size_t strength;
  };

  void check(const TruthTerm& t) const;
  int step_sign(HedgeId outer, const HedgeId* inner, int inner_sign, Generator g) const;

  AlgebraConfig config_;
  std::vector<HedgeInfo> hedges_;
  std::vector<int> relation_;  // row-major [k * n + h]
};

}  // namespace hedgeres
