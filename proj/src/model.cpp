#include "mms/model.hpp"

#include <algorithm>

#include "mms/error.hpp"

namespace mms {

std::string_view to_string(Kind kind) {
  return kind == Kind::kGoods ? "goods" : "chores";
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return labels;
}

Rational to_rational(const RawInstance::Value& value) {
  if (const auto* r = std::get_if<Rational>(&value)) return *r;
  return Rational::from_double(std::get<double>(value));
}

}  // namespace

Rational Instance::total(std::size_t agent) const {
  Rational sum;
  for (const Rational& u : row(agent)) sum += u;
  return sum;
}

bool Instance::is_zero_agent(std::size_t agent) const {
  const UtilityRow& r = row(agent);
  return std::all_of(r.begin(), r.end(),
                     [](const Rational& u) { return u.is_zero(); });
}

Instance validate_instance(const RawInstance& raw) {
  if (raw.n_agents == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "an instance needs at least one agent");
  }
  if (raw.utilities.size() != raw.n_agents) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(raw.n_agents) + " utility rows, got " +
                    std::to_string(raw.utilities.size()));
  }
  if (!raw.agents.empty() && raw.agents.size() != raw.n_agents) {
    throw Error(ErrorCode::kDimensionMismatch, "agent label count differs from agent count");
  }

  Instance out;
  out.kind_ = raw.kind;
  out.agents_ = raw.agents.empty() ? default_labels(raw.n_agents) : raw.agents;
  out.items_ = raw.items;
  out.utilities_.reserve(raw.n_agents);

  const std::size_t m = raw.items.size();
  for (std::size_t i = 0; i < raw.n_agents; ++i) {
    const auto& raw_row = raw.utilities[i];
    if (raw_row.size() != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(raw_row.size()) +
                      " entries, expected " + std::to_string(m));
    }
    UtilityRow row;
    row.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      Rational u = to_rational(raw_row[j]);
      const bool bad = raw.kind == Kind::kGoods ? u.sign() < 0 : u.sign() > 0;
      if (bad) {
        throw Error(ErrorCode::kSignViolation,
                    std::string(to_string(raw.kind)) + " instance has utility " +
                        u.to_string() + " at agent " + std::to_string(i) +
                        ", item " + std::to_string(j));
      }
      row.push_back(std::move(u));
    }
    out.utilities_.push_back(std::move(row));
  }
  return out;
}

Instance make_instance(Kind kind, const UtilityMatrix& utilities) {
  const std::size_t m = utilities.empty() ? 0 : utilities.front().size();
  return make_instance(kind, default_labels(utilities.size()), default_labels(m),
                       utilities);
}

Instance make_instance(Kind kind, std::vector<std::string> agents,
                       std::vector<std::string> items,
                       const UtilityMatrix& utilities) {
  RawInstance raw;
  raw.kind = kind;
  raw.n_agents = utilities.size();
  raw.agents = std::move(agents);
  raw.items = std::move(items);
  for (const auto& row : utilities) {
    raw.utilities.emplace_back(row.begin(), row.end());
  }
  return validate_instance(raw);
}

Instance negate_instance(const Instance& instance) {
  Instance out = instance;
  out.kind_ = instance.kind_ == Kind::kGoods ? Kind::kChores : Kind::kGoods;
  for (auto& row : out.utilities_) {
    for (auto& u : row) u = -u;
  }
  return out;
}

Allocation Allocation::from_bundles(std::vector<std::vector<std::size_t>> bundles,
                                    std::size_t n_items) {
  std::vector<bool> seen(n_items, false);
  for (auto& bundle : bundles) {
    for (std::size_t item : bundle) {
      if (item >= n_items) {
        throw Error(ErrorCode::kMalformedPartition,
                    "item index " + std::to_string(item) + " out of range");
      }
      if (seen[item]) {
        throw Error(ErrorCode::kMalformedPartition,
                    "item " + std::to_string(item) + " appears in two bundles");
      }
      seen[item] = true;
    }
    std::sort(bundle.begin(), bundle.end());
  }
  if (const auto it = std::find(seen.begin(), seen.end(), false); it != seen.end()) {
    throw Error(ErrorCode::kMalformedPartition,
                "item " + std::to_string(it - seen.begin()) + " is not allocated");
  }
  Allocation out;
  out.bundles_ = std::move(bundles);
  out.n_items_ = n_items;
  return out;
}

Allocation Allocation::from_assignment(std::span<const std::size_t> assignment,
                                       std::size_t n_bundles) {
  Allocation out;
  out.bundles_.resize(n_bundles);
  out.n_items_ = assignment.size();
  for (std::size_t item = 0; item < assignment.size(); ++item) {
    if (assignment[item] >= n_bundles) {
      throw Error(ErrorCode::kMalformedPartition,
                  "bundle index " + std::to_string(assignment[item]) + " out of range");
    }
    out.bundles_[assignment[item]].push_back(item);
  }
  return out;
}

Allocation Allocation::all_to(std::size_t bundle, std::size_t n_bundles,
                              std::size_t n_items) {
  std::vector<std::size_t> assignment(n_items, bundle);
  return from_assignment(assignment, n_bundles);
}

std::vector<std::size_t> Allocation::assignment() const {
  std::vector<std::size_t> out(n_items_, 0);
  for (std::size_t b = 0; b < bundles_.size(); ++b) {
    for (std::size_t item : bundles_[b]) out[item] = b;
  }
  return out;
}

Rational bundle_utility(const Instance& instance, std::size_t agent,
                        std::span<const std::size_t> bundle) {
  if (agent >= instance.n_agents()) {
    throw Error(ErrorCode::kIndexOutOfRange, "agent " + std::to_string(agent));
  }
  const UtilityRow& row = instance.row(agent);
  Rational sum;
  for (std::size_t item : bundle) {
    if (item >= row.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "item " + std::to_string(item));
    }
    sum += row[item];
  }
  return sum;
}

RatioValue RatioValue::finite(Rational value) {
  if (value.sign() < 0) {
    throw Error(ErrorCode::kBadParams, "ratio must be non-negative, got " + value.to_string());
  }
  RatioValue out;
  out.value_ = std::move(value);
  return out;
}

const Rational& RatioValue::value() const {
  if (!value_) throw Error(ErrorCode::kNonFiniteValue, "ratio is infinite");
  return *value_;
}

RatioValue RatioValue::scaled(const Rational& factor) const {
  if (factor.sign() < 0) {
    throw Error(ErrorCode::kBadParams, "negative ratio scale " + factor.to_string());
  }
  if (is_infinite()) return factor.is_zero() ? finite(0) : infinity();
  return finite(*value_ * factor);
}

std::optional<Rational> RatioValue::times(const Rational& guarantee) const {
  if (is_infinite()) {
    if (guarantee.is_zero()) return Rational(0);
    return std::nullopt;
  }
  return *value_ * guarantee;
}

std::string RatioValue::to_string() const {
  return is_infinite() ? "inf" : value_->to_string();
}

bool CheckReport::all_pass() const {
  return std::all_of(agents.begin(), agents.end(),
                     [](const AgentVerdict& v) { return v.pass; });
}

CheckReport check_allocation(const Instance& instance,
                             const Allocation& allocation,
                             const Criterion& criterion,
                             const GuaranteeProfile& profile) {
  const std::size_t n = instance.n_agents();
  if (allocation.n_bundles() != n || allocation.n_items() != instance.n_items()) {
    throw Error(ErrorCode::kMismatchedDimensions,
                "allocation has " + std::to_string(allocation.n_bundles()) +
                    " bundles over " + std::to_string(allocation.n_items()) +
                    " items; instance has " + std::to_string(n) + " agents and " +
                    std::to_string(instance.n_items()) + " items");
  }
  if (profile.size() != n) {
    throw Error(ErrorCode::kMismatchedDimensions, "guarantee profile size differs from agent count");
  }

  const bool upper = criterion.type == Criterion::Type::kPerverseMmax ||
                     criterion.type == Criterion::Type::kPerverseLambdaMinMax;

  CheckReport report;
  report.agents.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AgentVerdict v;
    v.utility = bundle_utility(instance, i, allocation.bundle(i));
    v.guarantee = upper ? profile[i].mmax : profile[i].mms;
    v.threshold = criterion.lambda.times(v.guarantee);
    if (v.threshold) {
      v.slack = upper ? *v.threshold - v.utility : v.utility - *v.threshold;
      v.pass = v.slack->sign() >= 0;
    } else {
      // Infinite threshold against a non-zero guarantee never passes.
      v.pass = false;
    }
    report.agents.push_back(std::move(v));
  }
  return report;
}

}  // namespace mms
