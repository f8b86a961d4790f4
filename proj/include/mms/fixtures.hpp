#pragma once

// Concrete instances used as regression anchors.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mms/model.hpp"

namespace mms::fixtures {

// Three agents, twelve items (j, k) for j = 1..3, k = 1..4, ordered
// row-major with j outer. u_i(j, k) = 10^6 B_jk + 10^3 O_jk + E^i_jk.
// Goods; an MmS allocation exists but none exists for the negation.
Instance three_agent_labels();
// Same with E^i subtracted; no MmS allocation, but the negation has one.
Instance three_agent_labels_subtracted();

// The allocation giving agent i the items of row i.
Allocation row_allocation();

// N agents sharing N(N-1) items of value 1/N and one item of value 1.
// Round robin on the chores version is exactly (2 - 1/N) off the guarantee.
// Throws Error{kBadParams} for n < 2.
Instance tight_round_robin(int n, Kind kind = Kind::kGoods);

// Two agents, items a and b; u_1 = (r, 1), u_2 = (1, r). Requires r > 1.
Instance two_agent_ratio(const Rational& r, Kind kind = Kind::kGoods);

// N agents sharing one utility list (the 3-partition reduction shape).
Instance identical_agents(const std::vector<Rational>& values, int n,
                          Kind kind = Kind::kGoods);

struct Params {
  std::optional<int> n;
  std::optional<Rational> r;
  std::vector<Rational> values;
  bool chores = false;
};

// Names: I, neg_I, J, neg_J, tight_rr, two_agent_r, identical.
// Throws Error{kBadParams} for unknown names or invalid parameters.
Instance by_name(std::string_view name, const Params& params = {});

std::vector<std::string> names();

}  // namespace mms::fixtures
