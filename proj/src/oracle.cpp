#include "mms/oracle.hpp"

#include <algorithm>

#include "mms/error.hpp"

namespace mms::oracle {

namespace {

// One agent's utilities times the common denominator of the row. Positive
// scaling preserves every comparison and every ratio for that agent.
struct ScaledRow {
  mpz_class scale;
  std::vector<mpz_class> values;
};

ScaledRow scale_row(const std::vector<Rational>& row) {
  ScaledRow out{common_denominator(row), {}};
  out.values.reserve(row.size());
  for (const Rational& u : row) {
    out.values.push_back(u.numerator() * (out.scale / u.denominator()));
  }
  return out;
}

mpz_class scale_value(const Rational& value, const mpz_class& scale) {
  const Rational scaled = value * Rational(scale);
  if (!scaled.is_integer()) {
    throw Error(ErrorCode::kBadParams, "guarantee " + value.to_string() +
                                           " is not a bundle value of this agent");
  }
  return scaled.numerator();
}

// a/b < c/d for b, d > 0.
bool less_ratio(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                const mpz_class& d) {
  return a * d < c * b;
}

}  // namespace

AssignmentOdometer::AssignmentOdometer(std::size_t n_bundles, std::size_t n_items)
    : n_bundles_(n_bundles), digits_(n_items, 0) {}

std::uint64_t assignment_count(std::size_t n_bundles, std::size_t n_items,
                               const Options& options) {
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < n_items; ++j) {
    if (n_bundles != 0 && count > options.state_cap / n_bundles) {
      throw Error(ErrorCode::kTooLarge,
                  std::to_string(n_bundles) + "^" + std::to_string(n_items) +
                      " assignments exceed the state cap of " +
                      std::to_string(options.state_cap));
    }
    count *= n_bundles;
  }
  if (count > options.state_cap) {
    throw Error(ErrorCode::kTooLarge, "assignment count exceeds the state cap");
  }
  return count;
}

ShareValue enumerate_guarantee(const Instance& instance, std::size_t agent,
                               Share which, const Options& options) {
  if (agent >= instance.n_agents()) {
    throw Error(ErrorCode::kIndexOutOfRange, "agent " + std::to_string(agent));
  }
  const std::size_t n = instance.n_agents();
  const std::size_t m = instance.n_items();
  assignment_count(n, m, options);

  const ScaledRow row = scale_row(instance.row(agent));
  const bool max_min = which == Share::kMaxMin;
  std::vector<mpz_class> sums(n, 0);
  for (const mpz_class& v : row.values) sums[0] += v;

  const auto evaluate = [&]() {
    return max_min ? *std::min_element(sums.begin(), sums.end())
                   : *std::max_element(sums.begin(), sums.end());
  };

  AssignmentOdometer odometer(n, m);
  mpz_class best = evaluate();
  std::vector<std::size_t> witness = odometer.assignment();
  const auto on_move = [&](std::size_t item, std::size_t from, std::size_t to) {
    sums[from] -= row.values[item];
    sums[to] += row.values[item];
  };
  while (odometer.next(on_move)) {
    const mpz_class value = evaluate();
    if (max_min ? value > best : value < best) {
      best = value;
      witness = odometer.assignment();
    }
  }
  return {Rational(best, row.scale), Allocation::from_assignment(witness, n)};
}

std::optional<Allocation> mms_allocation_search(const Instance& instance,
                                                const Options& options) {
  std::vector<Rational> mms;
  for (std::size_t i = 0; i < instance.n_agents(); ++i) {
    mms.push_back(enumerate_guarantee(instance, i, Share::kMaxMin, options).value);
  }
  return mms_allocation_search(instance, mms, options);
}

std::optional<Allocation> mms_allocation_search(const Instance& instance,
                                                std::span<const Rational> mms,
                                                const Options& options) {
  const std::size_t n = instance.n_agents();
  const std::size_t m = instance.n_items();
  if (mms.size() != n) {
    throw Error(ErrorCode::kMismatchedDimensions, "one guarantee per agent expected");
  }
  assignment_count(n, m, options);

  std::vector<ScaledRow> rows;
  std::vector<mpz_class> threshold;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(scale_row(instance.row(i)));
    threshold.push_back(scale_value(mms[i], rows.back().scale));
  }
  std::vector<mpz_class> own(n, 0);
  for (const mpz_class& v : rows[0].values) own[0] += v;

  const auto passes = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      if (own[i] < threshold[i]) return false;
    }
    return true;
  };

  AssignmentOdometer odometer(n, m);
  if (passes()) return Allocation::from_assignment(odometer.assignment(), n);
  const auto on_move = [&](std::size_t item, std::size_t from, std::size_t to) {
    own[from] -= rows[from].values[item];
    own[to] += rows[to].values[item];
  };
  while (odometer.next(on_move)) {
    if (passes()) return Allocation::from_assignment(odometer.assignment(), n);
  }
  return std::nullopt;
}

RatioResult enumerate_optimal_ratio(const Instance& instance, const Options& options) {
  const std::size_t n = instance.n_agents();
  const std::size_t m = instance.n_items();
  assignment_count(n, m, options);
  const bool goods = instance.kind() == Kind::kGoods;

  std::vector<ScaledRow> rows;
  std::vector<std::size_t> constrained;  // agents with a non-zero guarantee
  std::vector<mpz_class> guarantee(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(scale_row(instance.row(i)));
    const Rational g = enumerate_guarantee(instance, i, Share::kMaxMin, options).value;
    guarantee[i] = scale_value(g, rows.back().scale);
    if (guarantee[i] != 0) constrained.push_back(i);
  }

  AssignmentOdometer odometer(n, m);
  if (goods && constrained.empty()) {
    return {RatioValue::infinity(), Allocation::from_assignment(odometer.assignment(), n)};
  }

  std::vector<mpz_class> own(n, 0);
  for (const mpz_class& v : rows[0].values) own[0] += v;

  // Ratio of the current assignment as num/den with den > 0. For chores both
  // parts are negated into magnitudes.
  mpz_class num, den;
  const auto evaluate = [&]() {
    if (constrained.empty()) {
      num = 0;
      den = 1;
      return;
    }
    bool first = true;
    for (std::size_t i : constrained) {
      const mpz_class a = goods ? own[i] : mpz_class(-own[i]);
      const mpz_class b = goods ? guarantee[i] : mpz_class(-guarantee[i]);
      if (first || (goods ? less_ratio(a, b, num, den) : less_ratio(num, den, a, b))) {
        num = a;
        den = b;
        first = false;
      }
    }
  };

  evaluate();
  mpz_class best_num = num, best_den = den;
  std::vector<std::size_t> witness = odometer.assignment();
  const auto on_move = [&](std::size_t item, std::size_t from, std::size_t to) {
    own[from] -= rows[from].values[item];
    own[to] += rows[to].values[item];
  };
  while ((goods || best_num != 0) && odometer.next(on_move)) {
    evaluate();
    const bool better = goods ? less_ratio(best_num, best_den, num, den)
                              : less_ratio(num, den, best_num, best_den);
    if (better) {
      best_num = num;
      best_den = den;
      witness = odometer.assignment();
    }
  }
  return {RatioValue::finite(Rational(best_num, best_den)),
          Allocation::from_assignment(witness, n)};
}

sched::Solution enumerate_schedule(const sched::SchedulingProblem& problem,
                                   const Options& options) {
  const std::size_t n = problem.n_machines();
  const std::size_t m = problem.n_jobs();
  assignment_count(n, m, options);

  std::vector<Rational> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) all.push_back(problem.time(i, j));
  }
  const mpz_class scale = common_denominator(all);
  std::vector<std::vector<mpz_class>> time(n, std::vector<mpz_class>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& t = problem.time(i, j);
      time[i][j] = t.numerator() * (scale / t.denominator());
    }
  }

  const bool makespan = problem.objective() == sched::Objective::kMinimizeMakespan;
  std::vector<mpz_class> loads(n, 0);
  for (std::size_t j = 0; j < m; ++j) loads[0] += time[0][j];
  const auto evaluate = [&]() {
    return makespan ? *std::max_element(loads.begin(), loads.end())
                    : *std::min_element(loads.begin(), loads.end());
  };

  AssignmentOdometer odometer(n, m);
  mpz_class best = evaluate();
  std::vector<std::size_t> witness = odometer.assignment();
  const auto on_move = [&](std::size_t job, std::size_t from, std::size_t to) {
    loads[from] -= time[from][job];
    loads[to] += time[to][job];
  };
  while (odometer.next(on_move)) {
    const mpz_class value = evaluate();
    if (makespan ? value < best : value > best) {
      best = value;
      witness = odometer.assignment();
    }
  }
  return {Allocation::from_assignment(witness, n), Rational(best, scale), Rational(1)};
}

}  // namespace mms::oracle
