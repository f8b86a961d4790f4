#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mms/scheduling.hpp"

namespace mms::sched::detail {

// Problem rescaled by the common denominator so every time is an integer.
// The full machine x job matrix is materialized even for identical machines.
struct IntegerProblem {
  std::size_t n_machines = 0;
  std::size_t n_jobs = 0;
  bool identical = false;
  Objective objective = Objective::kMinimizeMakespan;
  std::vector<std::vector<mpz_class>> time;  // [machine][job]
  // Jobs with positive time on some machine. Others are pinned to machine 0.
  std::vector<std::size_t> active_jobs;
};

IntegerProblem to_integer_problem(const SchedulingProblem& problem);

// Exact optimum as a job -> machine vector (lexicographically smallest
// among optimal schedules).
std::vector<std::size_t> solve_exact(const IntegerProblem& problem,
                                     const Budget& budget);

// Approximate schedule within factor (1 + delta) as described in solve().
std::vector<std::size_t> solve_approx(const IntegerProblem& problem,
                                      const Rational& delta,
                                      const Budget& budget);

struct MpzVectorHash {
  std::size_t operator()(const std::vector<mpz_class>& v) const noexcept {
    std::size_t h = v.size();
    for (const mpz_class& x : v) {
      const mpz_srcptr p = x.get_mpz_t();
      const std::size_t low = mpz_size(p) > 0 ? mpz_getlimbn(p, 0) : 0;
      h ^= low + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace mms::sched::detail
