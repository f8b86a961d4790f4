#pragma once

// Data model for additive fair-division instances: goods/chores instances,
// allocations, share guarantees, ratios and the fairness checkers.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mms/rational.hpp"

namespace mms {

enum class Kind { kGoods, kChores };

std::string_view to_string(Kind kind);

using UtilityRow = std::vector<Rational>;
using UtilityMatrix = std::vector<UtilityRow>;

// Unvalidated input, as produced by a parser. Values may be doubles so the
// validator can reject non-finite input.
struct RawInstance {
  using Value = std::variant<Rational, double>;

  Kind kind = Kind::kGoods;
  std::size_t n_agents = 0;
  std::vector<std::string> agents;  // optional labels; defaults to "1".."N"
  std::vector<std::string> items;
  std::vector<std::vector<Value>> utilities;
};

// Validated additive instance. Immutable; all accessors are const.
class Instance {
 public:
  Kind kind() const { return kind_; }
  std::size_t n_agents() const { return utilities_.size(); }
  std::size_t n_items() const { return items_.size(); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& items() const { return items_; }
  const UtilityMatrix& utilities() const { return utilities_; }
  const UtilityRow& row(std::size_t agent) const { return utilities_.at(agent); }
  const Rational& utility(std::size_t agent, std::size_t item) const {
    return utilities_.at(agent).at(item);
  }

  // v_agent(M).
  Rational total(std::size_t agent) const;
  bool is_zero_agent(std::size_t agent) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend Instance validate_instance(const RawInstance& raw);
  friend Instance negate_instance(const Instance& instance);

  Instance() = default;

  Kind kind_ = Kind::kGoods;
  std::vector<std::string> agents_;
  std::vector<std::string> items_;
  UtilityMatrix utilities_;
};

// Throws Error{kDimensionMismatch | kSignViolation | kNonFiniteValue}.
Instance validate_instance(const RawInstance& raw);

// Convenience for code and tests: labels default to "1".."N" and "1".."M".
Instance make_instance(Kind kind, const UtilityMatrix& utilities);
Instance make_instance(Kind kind, std::vector<std::string> agents,
                       std::vector<std::string> items,
                       const UtilityMatrix& utilities);

// -I: kind flipped and every utility negated. An involution.
Instance negate_instance(const Instance& instance);

// An ordered N-partition of {0, ..., M-1}. Bundles may be empty; each bundle
// is kept sorted ascending.
class Allocation {
 public:
  // Throws Error{kMalformedPartition} on overlap, missing or unknown items.
  static Allocation from_bundles(std::vector<std::vector<std::size_t>> bundles,
                                 std::size_t n_items);
  // assignment[item] = bundle index.
  static Allocation from_assignment(std::span<const std::size_t> assignment,
                                    std::size_t n_bundles);
  // All items in `bundle`, the others empty.
  static Allocation all_to(std::size_t bundle, std::size_t n_bundles,
                           std::size_t n_items);

  std::size_t n_bundles() const { return bundles_.size(); }
  std::size_t n_items() const { return n_items_; }
  const std::vector<std::vector<std::size_t>>& bundles() const { return bundles_; }
  const std::vector<std::size_t>& bundle(std::size_t i) const { return bundles_.at(i); }
  std::vector<std::size_t> assignment() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  Allocation() = default;

  std::vector<std::vector<std::size_t>> bundles_;
  std::size_t n_items_ = 0;
};

// Additive utility of `bundle` for `agent`. Throws Error{kIndexOutOfRange}.
Rational bundle_utility(const Instance& instance, std::size_t agent,
                        std::span<const std::size_t> bundle);

// Non-negative extended rational: a finite value or +infinity.
class RatioValue {
 public:
  static RatioValue finite(Rational value);
  static RatioValue infinity() { return RatioValue(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  // c * this for c >= 0, with c * inf = inf for c > 0 and 0 * inf = 0.
  RatioValue scaled(const Rational& factor) const;

  // this * guarantee with inf * 0 = 0. nullopt when the product is infinite.
  std::optional<Rational> times(const Rational& guarantee) const;

  std::string to_string() const;  // "p/q" or "inf"

  friend bool operator==(const RatioValue&, const RatioValue&) = default;

 private:
  RatioValue() = default;
  std::optional<Rational> value_;
};

struct AgentGuarantee {
  Rational mms;
  Allocation mms_witness;
  Rational mmax;  // the min-max share
  Allocation mmax_witness;
};

struct GuaranteeProfile {
  std::vector<AgentGuarantee> agents;

  std::size_t size() const { return agents.size(); }
  const AgentGuarantee& operator[](std::size_t i) const { return agents.at(i); }
};

// Optimal-ratio value paired with an allocation witnessing it.
struct RatioResult {
  RatioValue lambda;
  Allocation allocation;
};

struct Criterion {
  enum class Type { kMms, kPerverseMmax, kLambdaMaxMin, kPerverseLambdaMinMax };

  static Criterion mms() { return {Type::kMms, RatioValue::finite(1)}; }
  static Criterion perverse_mmax() {
    return {Type::kPerverseMmax, RatioValue::finite(1)};
  }
  static Criterion lambda_max_min(RatioValue lambda) {
    return {Type::kLambdaMaxMin, std::move(lambda)};
  }
  static Criterion perverse_lambda_min_max(RatioValue lambda) {
    return {Type::kPerverseLambdaMinMax, std::move(lambda)};
  }

  Type type;
  RatioValue lambda;
};

struct AgentVerdict {
  bool pass = false;
  Rational utility;
  Rational guarantee;
  // lambda * guarantee; nullopt when infinite.
  std::optional<Rational> threshold;
  // Non-negative iff pass; nullopt when the threshold is infinite.
  std::optional<Rational> slack;
};

struct CheckReport {
  std::vector<AgentVerdict> agents;
  bool all_pass() const;
};

// Evaluates `allocation` against the criterion using the guarantees in
// `profile`. Throws Error{kMismatchedDimensions}.
CheckReport check_allocation(const Instance& instance,
                             const Allocation& allocation,
                             const Criterion& criterion,
                             const GuaranteeProfile& profile);

}  // namespace mms
