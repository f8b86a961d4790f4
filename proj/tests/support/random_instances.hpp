#pragma once

// Seeded generators shared by the unit, property and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mms/model.hpp"
#include "mms/scheduling.hpp"

namespace mms::test_support {

inline std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Integer utilities with magnitudes in [0, max_value], signed by kind.
inline Instance random_instance(std::mt19937_64& rng, Kind kind, std::size_t n,
                                std::size_t m, int max_value = 10) {
  UtilityMatrix utilities(n, UtilityRow(m));
  for (auto& row : utilities) {
    for (auto& u : row) {
      const int magnitude = uniform_int(rng, 0, max_value);
      u = Rational(kind == Kind::kChores ? -magnitude : magnitude);
    }
  }
  return make_instance(kind, utilities);
}

// Agent count in [1, max_agents], item count in [0, max_items].
inline Instance random_small_instance(std::mt19937_64& rng, Kind kind,
                                      std::size_t max_agents, std::size_t max_items,
                                      int max_value = 10) {
  const std::size_t n = uniform_size(rng, 1, max_agents);
  const std::size_t m = uniform_size(rng, 0, max_items);
  return random_instance(rng, kind, n, m, max_value);
}

// Mostly integers, occasionally a small-denominator fraction.
inline Rational random_time(std::mt19937_64& rng, int max_value) {
  const int num = uniform_int(rng, 0, max_value);
  if (uniform_int(rng, 0, 3) == 0) return Rational(num, uniform_int(rng, 1, 4));
  return Rational(num);
}

inline sched::SchedulingProblem random_problem(std::mt19937_64& rng,
                                               sched::MachineModel model,
                                               sched::Objective objective,
                                               std::size_t max_machines,
                                               std::size_t max_jobs, int max_value = 12) {
  const std::size_t n = uniform_size(rng, 1, max_machines);
  const std::size_t m = uniform_size(rng, 0, max_jobs);
  if (model == sched::MachineModel::kIdentical) {
    std::vector<Rational> times(m);
    for (auto& t : times) t = random_time(rng, max_value);
    return sched::SchedulingProblem::identical(n, std::move(times), objective);
  }
  std::vector<std::vector<Rational>> times(n, std::vector<Rational>(m));
  for (auto& row : times) {
    for (auto& t : row) t = random_time(rng, max_value);
  }
  return sched::SchedulingProblem::unrelated(std::move(times), objective);
}

inline Allocation random_allocation(std::mt19937_64& rng, std::size_t n_bundles,
                                    std::size_t n_items) {
  std::vector<std::size_t> assignment(n_items);
  for (auto& a : assignment) a = uniform_size(rng, 0, n_bundles - 1);
  return Allocation::from_assignment(assignment, n_bundles);
}

// Disjoint bundles covering exactly {0, ..., n_items - 1}.
inline bool is_partition(const Allocation& allocation, std::size_t n_bundles,
                         std::size_t n_items) {
  if (allocation.n_bundles() != n_bundles || allocation.n_items() != n_items) return false;
  std::vector<int> seen(n_items, 0);
  for (const auto& bundle : allocation.bundles()) {
    for (std::size_t item : bundle) {
      if (item >= n_items || seen[item]++ != 0) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace mms::test_support
