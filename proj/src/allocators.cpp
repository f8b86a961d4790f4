#include "mms/allocators.hpp"

#include <algorithm>
#include <numeric>

#include "mms/error.hpp"
#include "mms/shares.hpp"

namespace mms {

namespace {

using sched::Objective;
using sched::SchedulingProblem;
using sched::SolveMode;

std::vector<std::vector<Rational>> scaled_rows(const Instance& goods,
                                               std::span<const std::size_t> agents,
                                               std::span<const Rational> scale) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(agents.size());
  for (std::size_t a = 0; a < agents.size(); ++a) {
    std::vector<Rational> row = goods.row(agents[a]);
    for (Rational& u : row) u /= scale[a];
    rows.push_back(std::move(row));
  }
  return rows;
}

// Chores path on the negated (non-negative) instance: scale by mMS and
// minimize the makespan.
template <class GuaranteeFn, class SolveFn>
std::pair<RatioValue, Allocation> chores_via_makespan(const Instance& chores,
                                                      GuaranteeFn guarantee_of,
                                                      SolveFn solve_scaled) {
  const Instance goods = negate_instance(chores);
  const std::size_t n = goods.n_agents();
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = guarantee_of(goods, i);
    if (c[i].is_zero()) {
      // A zero guarantee means the agent is indifferent to every chore.
      return {RatioValue::finite(0), Allocation::all_to(i, n, goods.n_items())};
    }
  }
  std::vector<std::size_t> agents(n);
  std::iota(agents.begin(), agents.end(), 0);
  const auto problem = SchedulingProblem::unrelated(scaled_rows(goods, agents, c),
                                                    Objective::kMinimizeMakespan);
  sched::Solution solution = solve_scaled(problem);
  return {RatioValue::finite(solution.value), std::move(solution.schedule)};
}

// Goods path: scale agents with positive MmS and maximize the cover; agents
// with zero guarantee receive nothing.
template <class GuaranteeFn, class SolveFn>
std::pair<RatioValue, Allocation> goods_via_cover(const Instance& goods,
                                                  GuaranteeFn guarantee_of,
                                                  SolveFn solve_scaled) {
  const std::size_t n = goods.n_agents();
  std::vector<std::size_t> positive;
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) {
    Rational value = guarantee_of(goods, i);
    if (value.sign() > 0) {
      positive.push_back(i);
      c.push_back(std::move(value));
    }
  }
  if (positive.empty()) {
    return {RatioValue::infinity(), Allocation::all_to(0, n, goods.n_items())};
  }
  const auto problem = SchedulingProblem::unrelated(scaled_rows(goods, positive, c),
                                                    Objective::kMaximizeCover);
  const sched::Solution solution = solve_scaled(problem);

  std::vector<std::vector<std::size_t>> bundles(n);
  for (std::size_t k = 0; k < positive.size(); ++k) {
    bundles[positive[k]] = solution.schedule.bundle(k);
  }
  return {RatioValue::finite(solution.value),
          Allocation::from_bundles(std::move(bundles), goods.n_items())};
}

// k / 10^6 with k extremal subject to k^2 < x * 10^12 (below) or
// k^2 > x * 10^12 (above).
Rational grid_sqrt(const Rational& x, bool below) {
  const mpz_class million = 1'000'000;
  const Rational scaled = x * Rational(mpz_class(million * million));
  mpz_class floor_scaled;
  mpz_fdiv_q(floor_scaled.get_mpz_t(), scaled.numerator().get_mpz_t(),
             scaled.denominator().get_mpz_t());
  if (floor_scaled < 0) floor_scaled = 0;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), floor_scaled.get_mpz_t());
  if (below) {
    if (Rational(mpz_class(root * root)) == scaled) root -= 1;
  } else {
    root += 1;
  }
  return Rational(root, million);
}

}  // namespace

Allocation round_robin_chores(const Instance& instance) {
  if (instance.kind() != Kind::kChores) {
    throw Error(ErrorCode::kKindMismatch, "round robin expects a chores instance");
  }
  const std::size_t n = instance.n_agents();
  const std::size_t m = instance.n_items();

  std::vector<std::vector<std::size_t>> preference(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& order = preference[i];
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    const UtilityRow& row = instance.row(i);
    std::stable_sort(order.begin(), order.end(),
                     [&row](std::size_t a, std::size_t b) { return row[a] > row[b]; });
  }

  std::vector<bool> taken(m, false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::size_t> assignment(m, 0);
  for (std::size_t pick = 0; pick < m; ++pick) {
    const std::size_t agent = pick % n;
    std::size_t& c = cursor[agent];
    while (taken[preference[agent][c]]) ++c;
    const std::size_t item = preference[agent][c];
    taken[item] = true;
    assignment[item] = agent;
  }
  return Allocation::from_assignment(assignment, n);
}

RatioResult optimal_mms_exact(const Instance& instance, const sched::Budget& budget) {
  const SolveMode exact = SolveMode::exact();
  const auto solve_scaled = [&](const SchedulingProblem& problem) {
    return sched::solve(problem, exact, budget);
  };
  if (instance.kind() == Kind::kChores) {
    auto [lambda, allocation] = chores_via_makespan(
        instance,
        [&](const Instance& goods, std::size_t i) {
          return guarantee(goods, i, Share::kMinMax, exact, budget).value;
        },
        solve_scaled);
    return {std::move(lambda), std::move(allocation)};
  }
  auto [lambda, allocation] = goods_via_cover(
      instance,
      [&](const Instance& goods, std::size_t i) {
        return guarantee(goods, i, Share::kMaxMin, exact, budget).value;
      },
      solve_scaled);
  return {std::move(lambda), std::move(allocation)};
}

PtasConfig PtasConfig::defaults(const Rational& epsilon, Kind kind) {
  if (epsilon.sign() <= 0) {
    throw Error(ErrorCode::kConfigViolation, "epsilon must be positive");
  }
  const bool chores = kind == Kind::kChores;
  const Rational root = chores ? grid_sqrt(Rational(1) + epsilon, true)
                               : grid_sqrt(Rational(1) - epsilon, false);
  PtasConfig config{epsilon, root, root};
  if (!chores && config.alpha.is_zero()) {
    config.alpha = config.beta = Rational(mpz_class(1), mpz_class(1'000'000));
  }
  config.validate(kind);
  return config;
}

void PtasConfig::validate(Kind kind) const {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kConfigViolation,
                why + " (epsilon=" + epsilon.to_string() + ", alpha=" +
                    alpha.to_string() + ", beta=" + beta.to_string() + ")");
  };
  if (epsilon.sign() <= 0) fail("epsilon must be positive");
  const Rational one = 1;
  if (kind == Kind::kChores) {
    if (alpha <= one || beta <= one) fail("chores need alpha > 1 and beta > 1");
    if (alpha * beta >= one + epsilon) fail("chores need alpha * beta < 1 + epsilon");
  } else {
    if (alpha.sign() <= 0 || alpha >= one || beta.sign() <= 0 || beta >= one) {
      fail("goods need 0 < alpha < 1 and 0 < beta < 1");
    }
    if (alpha * beta <= one - epsilon) fail("goods need alpha * beta > 1 - epsilon");
  }
}

PtasResult optimal_mms_ptas(const Instance& instance, const PtasConfig& config,
                            const sched::Budget& budget) {
  config.validate(instance.kind());
  const Rational one = 1;
  if (instance.kind() == Kind::kChores) {
    // mMS <= c <= alpha * mMS, then a beta-approximate makespan.
    const SolveMode share_mode = SolveMode::approx(config.alpha - one);
    const SolveMode schedule_mode = SolveMode::approx(config.beta - one);
    auto [lambda, allocation] = chores_via_makespan(
        instance,
        [&](const Instance& goods, std::size_t i) {
          return guarantee(goods, i, Share::kMinMax, share_mode, budget).value;
        },
        [&](const SchedulingProblem& problem) {
          return sched::solve(problem, schedule_mode, budget);
        });
    return {std::move(allocation), std::move(lambda), config.alpha * config.beta};
  }
  // alpha * MmS <= c <= MmS, then a cover within factor beta.
  const SolveMode share_mode = SolveMode::approx(config.alpha.reciprocal() - one);
  const SolveMode schedule_mode = SolveMode::approx(config.beta.reciprocal() - one);
  auto [lambda, allocation] = goods_via_cover(
      instance,
      [&](const Instance& goods, std::size_t i) {
        return guarantee(goods, i, Share::kMaxMin, share_mode, budget).value;
      },
      [&](const SchedulingProblem& problem) {
        return sched::solve(problem, schedule_mode, budget);
      });
  return {std::move(allocation), std::move(lambda), config.alpha * config.beta};
}

}  // namespace mms
