#pragma once

// Exhaustive ground truth. Every routine scans all N^M item -> agent
// assignments in base-N order with item 0 as the most significant digit; the
// first witness found in that order is reported.

#include <cstdint>
#include <optional>

#include "mms/model.hpp"
#include "mms/scheduling.hpp"
#include "mms/shares.hpp"

namespace mms::oracle {

struct Options {
  // Maximum number of assignments a scan may visit.
  std::uint64_t state_cap = 20'000'000;
};

// Throws Error{kTooLarge} when n_bundles^n_items exceeds the cap.
std::uint64_t assignment_count(std::size_t n_bundles, std::size_t n_items,
                               const Options& options);

// Base-N odometer over assignments; reports each digit change so callers can
// update running sums.
class AssignmentOdometer {
 public:
  AssignmentOdometer(std::size_t n_bundles, std::size_t n_items);

  const std::vector<std::size_t>& assignment() const { return digits_; }

  // Advances to the next assignment, calling on_move(item, from, to) for each
  // changed digit. Returns false after the last assignment.
  template <class OnMove>
  bool next(OnMove&& on_move) {
    for (std::size_t j = digits_.size(); j-- > 0;) {
      const std::size_t from = digits_[j];
      if (from + 1 < n_bundles_) {
        digits_[j] = from + 1;
        on_move(j, from, from + 1);
        return true;
      }
      digits_[j] = 0;
      on_move(j, from, std::size_t{0});
    }
    return false;
  }

 private:
  std::size_t n_bundles_;
  std::vector<std::size_t> digits_;
};

// Literal max-min / min-max over all N-partitions. Throws kTooLarge.
ShareValue enumerate_guarantee(const Instance& instance, std::size_t agent,
                               Share which, const Options& options = {});

// Some allocation giving every agent at least its MmS guarantee, or nullopt.
// Guarantees are computed by enumeration. Throws kTooLarge.
std::optional<Allocation> mms_allocation_search(const Instance& instance,
                                                const Options& options = {});

// Same, against caller-supplied MmS guarantees.
std::optional<Allocation> mms_allocation_search(const Instance& instance,
                                                std::span<const Rational> mms,
                                                const Options& options = {});

// Optimal MmS ratio by enumeration. Goods: max over allocations of
// min_{MmS_i > 0} v_i(S_i) / MmS_i (inf when no agent has MmS_i > 0).
// Chores: min over allocations of max_{MmS_i < 0} d_i(S_i) / MmS_i.
RatioResult enumerate_optimal_ratio(const Instance& instance,
                                    const Options& options = {});

// Optimal scheduling value by enumeration, with the first optimal
// assignment in base-N order (the lexicographically smallest).
sched::Solution enumerate_schedule(const sched::SchedulingProblem& problem,
                                   const Options& options = {});

}  // namespace mms::oracle
