#pragma once

// Parallel-machine scheduling without preemption: P/C_max, P/C_min,
// R/C_max and R/C_min for a small fixed number of machines.
//
// Exact mode is a depth-first branch and bound. Approx(delta) is a
// trimmed-state dynamic program over machine-load vectors whose loads are
// bucketed on a geometric grid; it is polynomial in the job count for a fixed
// machine count and delta.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mms/model.hpp"
#include "mms/rational.hpp"

namespace mms::sched {

enum class MachineModel { kIdentical, kUnrelated };
enum class Objective { kMinimizeMakespan, kMaximizeCover };

class SchedulingProblem {
 public:
  // Identical machines; times[j] is the processing time of job j.
  static SchedulingProblem identical(std::size_t n_machines,
                                     std::vector<Rational> times,
                                     Objective objective);
  // Unrelated machines; times[i][j] is the time of job j on machine i.
  static SchedulingProblem unrelated(std::vector<std::vector<Rational>> times,
                                     Objective objective);

  MachineModel model() const { return model_; }
  Objective objective() const { return objective_; }
  std::size_t n_machines() const { return n_machines_; }
  std::size_t n_jobs() const { return n_jobs_; }
  const Rational& time(std::size_t machine, std::size_t job) const {
    return model_ == MachineModel::kIdentical ? times_[0][job] : times_[machine][job];
  }

  // Makespan or cover of an assignment (job -> machine).
  Rational evaluate(std::span<const std::size_t> assignment) const;

 private:
  SchedulingProblem() = default;

  MachineModel model_ = MachineModel::kIdentical;
  Objective objective_ = Objective::kMinimizeMakespan;
  std::size_t n_machines_ = 0;
  std::size_t n_jobs_ = 0;
  std::vector<std::vector<Rational>> times_;  // one row when identical
};

class SolveMode {
 public:
  static SolveMode exact() { return SolveMode(); }
  // Throws Error{kConfigViolation} unless delta > 0.
  static SolveMode approx(Rational delta);

  bool is_exact() const { return exact_; }
  const Rational& delta() const { return delta_; }

 private:
  SolveMode() = default;
  bool exact_ = true;
  Rational delta_;
};

struct Budget {
  // Branch-and-bound nodes across both search phases.
  std::uint64_t max_nodes = 20'000'000;
  // Total load vectors kept by the approximate dynamic program.
  std::uint64_t max_states = 4'000'000;
};

struct Solution {
  // Bundle i holds the jobs of machine i.
  Allocation schedule;
  Rational value;
  // 1 for exact solves, 1 + delta otherwise: value <= factor * OPT for
  // C_max, value >= OPT / factor for C_min.
  Rational certified_factor;
};

// Throws Error{kBudgetExceeded} when the search or state space outgrows the
// budget. Among optimal schedules the exact engine returns the one with the
// lexicographically smallest job->machine vector.
Solution solve(const SchedulingProblem& problem, const SolveMode& mode,
               const Budget& budget = {});

}  // namespace mms::sched
