#pragma once

// Allocation algorithms: round-robin picking for chores, and exact and
// approximate optimal-MmS allocations through unrelated-machine scheduling.

#include "mms/model.hpp"
#include "mms/scheduling.hpp"

namespace mms {

// Agents pick in index order, repeatedly; each takes an available chore of
// largest (least negative) utility, lowest item index on ties. Every agent
// ends with at least (2 - 1/N) times its MmS guarantee.
// Throws Error{kKindMismatch} for goods instances.
Allocation round_robin_chores(const Instance& instance);

// Optimal MmS ratio and an optimal MmS allocation, from exact guarantees and
// exact R/C_max (chores) or R/C_min (goods).
// Throws Error{kBudgetExceeded} when the exact searches are too large.
RatioResult optimal_mms_exact(const Instance& instance,
                              const sched::Budget& budget = {});

// Error split for the approximation scheme. For chores alpha, beta > 1 and
// alpha * beta < 1 + epsilon; for goods alpha, beta in (0, 1) and
// alpha * beta > 1 - epsilon.
struct PtasConfig {
  Rational epsilon;
  Rational alpha;
  Rational beta;

  // alpha = beta = k / 10^6 closest to sqrt(1 + epsilon) from below (chores)
  // or sqrt(1 - epsilon) from above (goods). Throws kConfigViolation when no
  // such k satisfies the constraints.
  static PtasConfig defaults(const Rational& epsilon, Kind kind);

  // Throws Error{kConfigViolation}.
  void validate(Kind kind) const;
};

struct PtasResult {
  Allocation allocation;
  // Objective of the approximate scheduling step: an estimate of the ratio.
  RatioValue lambda_estimate;
  // alpha * beta: the allocation achieves this factor times the optimal ratio.
  Rational certified_factor;
};

PtasResult optimal_mms_ptas(const Instance& instance, const PtasConfig& config,
                            const sched::Budget& budget = {});

}  // namespace mms
