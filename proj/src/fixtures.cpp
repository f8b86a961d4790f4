#include "mms/fixtures.hpp"

#include <array>

#include "mms/error.hpp"

namespace mms::fixtures {

namespace {

using Matrix3x4 = std::array<std::array<int, 4>, 3>;

constexpr Matrix3x4 kBase = {{{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}};
constexpr Matrix3x4 kOffsets = {{{17, 25, 12, 1}, {2, 22, 3, 28}, {11, 0, 21, 23}}};
constexpr std::array<Matrix3x4, 3> kPerturbations = {{
    {{{-3, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}},
    {{{-3, 1, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}},
    {{{-3, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
}};

Instance labelled_instance(int perturbation_sign) {
  std::vector<std::string> items;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 4; ++k) {
      items.push_back("(" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  }
  UtilityMatrix utilities(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        utilities[i].push_back(Rational(1'000'000L * kBase[j][k] + 1'000L * kOffsets[j][k] +
                                        perturbation_sign * kPerturbations[i][j][k]));
      }
    }
  }
  return make_instance(Kind::kGoods, {"1", "2", "3"}, std::move(items), utilities);
}

Instance with_kind(const Instance& goods, Kind kind) {
  return kind == Kind::kGoods ? goods : negate_instance(goods);
}

}  // namespace

Instance three_agent_labels() { return labelled_instance(+1); }

Instance three_agent_labels_subtracted() { return labelled_instance(-1); }

Allocation row_allocation() {
  std::vector<std::vector<std::size_t>> bundles(3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 4; ++k) bundles[j].push_back(4 * j + k);
  }
  return Allocation::from_bundles(std::move(bundles), 12);
}

Instance tight_round_robin(int n, Kind kind) {
  if (n < 2) {
    throw Error(ErrorCode::kBadParams, "tight_rr needs n >= 2, got " + std::to_string(n));
  }
  const std::size_t small = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
  UtilityRow row(small, Rational(mpz_class(1), mpz_class(n)));
  row.push_back(Rational(1));
  std::vector<std::string> items;
  for (std::size_t j = 1; j <= small + 1; ++j) items.push_back("t" + std::to_string(j));
  std::vector<std::string> agents;
  for (int i = 1; i <= n; ++i) agents.push_back(std::to_string(i));
  const Instance goods = make_instance(Kind::kGoods, std::move(agents), std::move(items),
                                       UtilityMatrix(static_cast<std::size_t>(n), row));
  return with_kind(goods, kind);
}

Instance two_agent_ratio(const Rational& r, Kind kind) {
  if (r <= Rational(1)) {
    throw Error(ErrorCode::kBadParams, "two_agent_r needs r > 1, got " + r.to_string());
  }
  const Instance goods = make_instance(Kind::kGoods, {"1", "2"}, {"a", "b"},
                                       {{r, Rational(1)}, {Rational(1), r}});
  return with_kind(goods, kind);
}

Instance identical_agents(const std::vector<Rational>& values, int n, Kind kind) {
  if (n < 1) {
    throw Error(ErrorCode::kBadParams, "identical needs n >= 1, got " + std::to_string(n));
  }
  for (const Rational& v : values) {
    if (v.sign() < 0) {
      throw Error(ErrorCode::kBadParams, "identical takes non-negative magnitudes");
    }
  }
  const Instance goods =
      make_instance(Kind::kGoods, UtilityMatrix(static_cast<std::size_t>(n), values));
  return with_kind(goods, kind);
}

Instance by_name(std::string_view name, const Params& params) {
  const Kind kind = params.chores ? Kind::kChores : Kind::kGoods;
  if (name == "I") return three_agent_labels();
  if (name == "neg_I") return negate_instance(three_agent_labels());
  if (name == "J") return three_agent_labels_subtracted();
  if (name == "neg_J") return negate_instance(three_agent_labels_subtracted());
  if (name == "tight_rr") {
    if (!params.n) throw Error(ErrorCode::kBadParams, "tight_rr needs --n");
    return tight_round_robin(*params.n, kind);
  }
  if (name == "two_agent_r") {
    if (!params.r) throw Error(ErrorCode::kBadParams, "two_agent_r needs --r");
    return two_agent_ratio(*params.r, kind);
  }
  if (name == "identical") {
    if (!params.n) throw Error(ErrorCode::kBadParams, "identical needs --n");
    return identical_agents(params.values, *params.n, kind);
  }
  throw Error(ErrorCode::kBadParams, "unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> names() {
  return {"I", "neg_I", "J", "neg_J", "tight_rr", "two_agent_r", "identical"};
}

}  // namespace mms::fixtures
