#include "mms/scheduling.hpp"

#include <algorithm>

#include "integer_problem.hpp"
#include "mms/error.hpp"

namespace mms::sched {

namespace {

void require_non_negative(const std::vector<Rational>& row) {
  for (const Rational& t : row) {
    if (t.sign() < 0) {
      throw Error(ErrorCode::kBadParams, "negative processing time " + t.to_string());
    }
  }
}

}  // namespace

SchedulingProblem SchedulingProblem::identical(std::size_t n_machines,
                                               std::vector<Rational> times,
                                               Objective objective) {
  if (n_machines == 0) throw Error(ErrorCode::kBadParams, "no machines");
  require_non_negative(times);
  SchedulingProblem p;
  p.model_ = MachineModel::kIdentical;
  p.objective_ = objective;
  p.n_machines_ = n_machines;
  p.n_jobs_ = times.size();
  p.times_.push_back(std::move(times));
  return p;
}

SchedulingProblem SchedulingProblem::unrelated(
    std::vector<std::vector<Rational>> times, Objective objective) {
  if (times.empty()) throw Error(ErrorCode::kBadParams, "no machines");
  const std::size_t m = times.front().size();
  for (const auto& row : times) {
    if (row.size() != m) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged processing-time matrix");
    }
    require_non_negative(row);
  }
  SchedulingProblem p;
  p.model_ = MachineModel::kUnrelated;
  p.objective_ = objective;
  p.n_machines_ = times.size();
  p.n_jobs_ = m;
  p.times_ = std::move(times);
  return p;
}

Rational SchedulingProblem::evaluate(std::span<const std::size_t> assignment) const {
  if (assignment.size() != n_jobs_) {
    throw Error(ErrorCode::kMismatchedDimensions, "assignment length differs from job count");
  }
  std::vector<Rational> loads(n_machines_);
  for (std::size_t j = 0; j < n_jobs_; ++j) {
    if (assignment[j] >= n_machines_) {
      throw Error(ErrorCode::kIndexOutOfRange, "machine " + std::to_string(assignment[j]));
    }
    loads[assignment[j]] += time(assignment[j], j);
  }
  return objective_ == Objective::kMinimizeMakespan
             ? *std::max_element(loads.begin(), loads.end())
             : *std::min_element(loads.begin(), loads.end());
}

SolveMode SolveMode::approx(Rational delta) {
  if (delta.sign() <= 0) {
    throw Error(ErrorCode::kConfigViolation,
                "approximation parameter must be positive, got " + delta.to_string());
  }
  SolveMode mode;
  mode.exact_ = false;
  mode.delta_ = std::move(delta);
  return mode;
}

namespace detail {

IntegerProblem to_integer_problem(const SchedulingProblem& problem) {
  IntegerProblem out;
  out.n_machines = problem.n_machines();
  out.n_jobs = problem.n_jobs();
  out.identical = problem.model() == MachineModel::kIdentical;
  out.objective = problem.objective();

  std::vector<Rational> all;
  all.reserve(out.n_machines * out.n_jobs);
  for (std::size_t i = 0; i < out.n_machines; ++i) {
    for (std::size_t j = 0; j < out.n_jobs; ++j) all.push_back(problem.time(i, j));
  }
  const mpz_class scale = common_denominator(all);

  out.time.assign(out.n_machines, std::vector<mpz_class>(out.n_jobs));
  for (std::size_t i = 0; i < out.n_machines; ++i) {
    for (std::size_t j = 0; j < out.n_jobs; ++j) {
      const Rational& t = problem.time(i, j);
      out.time[i][j] = t.numerator() * (scale / t.denominator());
    }
  }
  for (std::size_t j = 0; j < out.n_jobs; ++j) {
    for (std::size_t i = 0; i < out.n_machines; ++i) {
      if (out.time[i][j] != 0) {
        out.active_jobs.push_back(j);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

Solution solve(const SchedulingProblem& problem, const SolveMode& mode,
               const Budget& budget) {
  const detail::IntegerProblem ip = detail::to_integer_problem(problem);
  std::vector<std::size_t> assignment;
  if (mode.is_exact()) {
    assignment = detail::solve_exact(ip, budget);
  } else {
    assignment = detail::solve_approx(ip, mode.delta(), budget);
  }
  Solution out{Allocation::from_assignment(assignment, problem.n_machines()),
               problem.evaluate(assignment),
               mode.is_exact() ? Rational(1) : Rational(1) + mode.delta()};
  return out;
}

}  // namespace mms::sched
