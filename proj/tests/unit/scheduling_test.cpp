#include <gtest/gtest.h>

#include "mms/error.hpp"
#include "mms/fixtures.hpp"
#include "mms/oracle.hpp"
#include "mms/scheduling.hpp"
#include "random_instances.hpp"

namespace mms::sched {
namespace {

using test_support::random_problem;

Rational solve_exact(const SchedulingProblem& p) { return solve(p, SolveMode::exact()).value; }

std::vector<Rational> repeat(const Rational& v, std::size_t count) {
  return std::vector<Rational>(count, v);
}

TEST(Scheduling, LabelOffsetsBalanceExactly) {
  const Instance instance = fixtures::three_agent_labels();
  const auto problem =
      SchedulingProblem::identical(3, instance.row(0), Objective::kMinimizeMakespan);
  const Solution s = solve(problem, SolveMode::exact());
  EXPECT_EQ(s.value, Rational(4'055'000));
  EXPECT_EQ(s.certified_factor, Rational(1));
  EXPECT_EQ(problem.evaluate(s.schedule.assignment()), s.value);
}

TEST(Scheduling, TwoUnitJobsCoverTwoMachines) {
  const auto problem =
      SchedulingProblem::identical(2, {1, 1}, Objective::kMaximizeCover);
  const Solution s = solve(problem, SolveMode::exact());
  EXPECT_EQ(s.value, Rational(1));
  EXPECT_EQ(s.schedule.bundle(0).size(), 1u);
  EXPECT_EQ(s.schedule.bundle(1).size(), 1u);
}

// Six jobs of 1/3 and one of 1 on three machines: the 1-job alone plus three
// 1/3-jobs on each other machine covers every machine with load 1.
TEST(Scheduling, ThirdsAndOneCoverValueIsOne) {
  std::vector<Rational> times = repeat(Rational(1, 3), 6);
  times.push_back(1);
  const auto problem = SchedulingProblem::identical(3, times, Objective::kMaximizeCover);
  EXPECT_EQ(oracle::enumerate_schedule(problem).value, Rational(1));
  EXPECT_EQ(solve_exact(problem), Rational(1));
}

TEST(Scheduling, EmptyAndDegenerateProblems) {
  for (Objective obj : {Objective::kMinimizeMakespan, Objective::kMaximizeCover}) {
    EXPECT_EQ(solve_exact(SchedulingProblem::identical(3, {}, obj)), Rational(0));
    const Solution one = solve(SchedulingProblem::identical(1, {2, 3}, obj), SolveMode::exact());
    EXPECT_EQ(one.value, Rational(5));
    const Solution approx =
        solve(SchedulingProblem::identical(2, {}, obj), SolveMode::approx(Rational(1, 10)));
    EXPECT_EQ(approx.value, Rational(0));
  }
  EXPECT_EQ(solve_exact(SchedulingProblem::identical(3, {4, 5}, Objective::kMaximizeCover)),
            Rational(0));
}

TEST(Scheduling, ZeroJobsGoToMachineZero) {
  const auto problem =
      SchedulingProblem::unrelated({{0, 3, 0}, {0, 1, 0}}, Objective::kMinimizeMakespan);
  const Solution s = solve(problem, SolveMode::exact());
  EXPECT_EQ(s.value, Rational(1));
  EXPECT_EQ(s.schedule.assignment(), (std::vector<std::size_t>{0, 1, 0}));
}

TEST(Scheduling, InputErrors) {
  EXPECT_THROW(SchedulingProblem::identical(0, {1}, Objective::kMinimizeMakespan), Error);
  EXPECT_THROW(SchedulingProblem::identical(2, {-1}, Objective::kMinimizeMakespan), Error);
  EXPECT_THROW(SchedulingProblem::unrelated({{1, 2}, {1}}, Objective::kMinimizeMakespan), Error);
  EXPECT_THROW(SchedulingProblem::unrelated({}, Objective::kMinimizeMakespan), Error);
  EXPECT_THROW(SolveMode::approx(0), Error);
  EXPECT_THROW(SolveMode::approx(Rational(-1, 2)), Error);
}

TEST(Scheduling, BudgetExceededIsReported) {
  std::mt19937_64 rng(7);
  std::vector<Rational> times;
  for (int j = 0; j < 30; ++j) times.push_back(test_support::uniform_int(rng, 100, 999));
  const auto problem = SchedulingProblem::identical(4, times, Objective::kMaximizeCover);
  Budget tiny;
  tiny.max_nodes = 50;
  try {
    solve(problem, SolveMode::exact(), tiny);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  Budget few_states;
  few_states.max_states = 10;
  EXPECT_THROW(solve(problem, SolveMode::approx(Rational(1, 100)), few_states), Error);
}

// Among optimal schedules the smallest job->machine vector is returned.
TEST(Scheduling, LexicographicTieBreak) {
  std::mt19937_64 rng(11);
  for (auto model : {MachineModel::kIdentical, MachineModel::kUnrelated}) {
    for (auto obj : {Objective::kMinimizeMakespan, Objective::kMaximizeCover}) {
      for (int trial = 0; trial < 60; ++trial) {
        const auto problem = random_problem(rng, model, obj, 3, 6, 5);
        const Solution expected = oracle::enumerate_schedule(problem);
        const Solution got = solve(problem, SolveMode::exact());
        ASSERT_EQ(got.value, expected.value);
        EXPECT_EQ(got.schedule.assignment(), expected.schedule.assignment());
      }
    }
  }
}

class SchedulingRandom
    : public ::testing::TestWithParam<std::tuple<MachineModel, Objective>> {};

TEST_P(SchedulingRandom, ExactMatchesEnumeration) {
  const auto [model, obj] = GetParam();
  std::mt19937_64 rng(1000 + static_cast<int>(model) * 10 + static_cast<int>(obj));
  for (int trial = 0; trial < 80; ++trial) {
    const auto problem = random_problem(rng, model, obj, 3, 8);
    const Solution s = solve(problem, SolveMode::exact());
    EXPECT_EQ(s.value, oracle::enumerate_schedule(problem).value);
    EXPECT_EQ(problem.evaluate(s.schedule.assignment()), s.value);
    EXPECT_TRUE(test_support::is_partition(s.schedule, problem.n_machines(), problem.n_jobs()));
  }
}

TEST_P(SchedulingRandom, ApproxWithinCertifiedFactor) {
  const auto [model, obj] = GetParam();
  std::mt19937_64 rng(2000 + static_cast<int>(model) * 10 + static_cast<int>(obj));
  // Large magnitudes make the trimming buckets wider than one time unit.
  for (const int max_value : {12, 100'000}) {
  for (const Rational& delta : {Rational(1, 10), Rational(1, 4)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto problem = random_problem(rng, model, obj, 3, 8, max_value);
      const Rational opt = solve_exact(problem);
      const Solution s = solve(problem, SolveMode::approx(delta));
      EXPECT_EQ(s.certified_factor, Rational(1) + delta);
      EXPECT_EQ(problem.evaluate(s.schedule.assignment()), s.value);
      if (obj == Objective::kMinimizeMakespan) {
        EXPECT_GE(s.value, opt);
        EXPECT_LE(s.value, s.certified_factor * opt);
      } else {
        EXPECT_LE(s.value, opt);
        EXPECT_GE(s.value * s.certified_factor, opt);
      }
    }
  }
  }
}

TEST_P(SchedulingRandom, AddingAJobIsMonotone) {
  const auto [model, obj] = GetParam();
  std::mt19937_64 rng(3000 + static_cast<int>(model) * 10 + static_cast<int>(obj));
  for (int trial = 0; trial < 40; ++trial) {
    const auto base = random_problem(rng, model, obj, 3, 7);
    std::vector<std::vector<Rational>> times(base.n_machines());
    for (std::size_t i = 0; i < base.n_machines(); ++i) {
      for (std::size_t j = 0; j < base.n_jobs(); ++j) times[i].push_back(base.time(i, j));
    }
    const Rational extra = test_support::random_time(rng, 12);
    for (auto& row : times) {
      row.push_back(model == MachineModel::kIdentical ? extra
                                                      : test_support::random_time(rng, 12));
    }
    const auto grown = model == MachineModel::kIdentical
                           ? SchedulingProblem::identical(base.n_machines(), times[0], obj)
                           : SchedulingProblem::unrelated(times, obj);
    // Both objectives weakly grow: the old schedule plus the new job is feasible.
    EXPECT_GE(solve_exact(grown), solve_exact(base));
  }
}

TEST_P(SchedulingRandom, ScaleEquivariance) {
  const auto [model, obj] = GetParam();
  std::mt19937_64 rng(4000 + static_cast<int>(model) * 10 + static_cast<int>(obj));
  for (int trial = 0; trial < 40; ++trial) {
    const auto base = random_problem(rng, model, obj, 3, 7);
    const Rational c(test_support::uniform_int(rng, 1, 9), test_support::uniform_int(rng, 1, 9));
    std::vector<std::vector<Rational>> times(base.n_machines());
    for (std::size_t i = 0; i < base.n_machines(); ++i) {
      for (std::size_t j = 0; j < base.n_jobs(); ++j) times[i].push_back(c * base.time(i, j));
    }
    const auto scaled = model == MachineModel::kIdentical
                            ? SchedulingProblem::identical(base.n_machines(), times[0], obj)
                            : SchedulingProblem::unrelated(times, obj);
    EXPECT_EQ(solve_exact(scaled), c * solve_exact(base));
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllFour, SchedulingRandom,
    ::testing::Combine(::testing::Values(MachineModel::kIdentical, MachineModel::kUnrelated),
                       ::testing::Values(Objective::kMinimizeMakespan,
                                         Objective::kMaximizeCover)));

// Greedy leaves machine 1 empty here, so the cover has no positive scale.
TEST(Scheduling, ApproxCoverWithoutGreedyScale) {
  const auto problem = SchedulingProblem::unrelated({{1, 1}, {1, 0}}, Objective::kMaximizeCover);
  EXPECT_EQ(solve(problem, SolveMode::approx(Rational(1, 10))).value, Rational(1));

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = test_support::uniform_size(rng, 2, 3);
    const std::size_t m = test_support::uniform_size(rng, 2, 8);
    std::vector<std::vector<Rational>> times(n, std::vector<Rational>(m));
    for (auto& row : times) {
      for (auto& t : row) {
        t = test_support::uniform_int(rng, 0, 2) == 0 ? test_support::uniform_int(rng, 1, 50'000)
                                                      : 0;
      }
    }
    const auto p = SchedulingProblem::unrelated(times, Objective::kMaximizeCover);
    const Rational opt = solve_exact(p);
    const Solution s = solve(p, SolveMode::approx(Rational(1, 10)));
    EXPECT_LE(s.value, opt);
    EXPECT_GE(s.value * s.certified_factor, opt);
  }
}

TEST(Scheduling, ApproxHandlesLargerInstancesQuickly) {
  std::mt19937_64 rng(5);
  std::vector<std::vector<Rational>> times(3);
  for (auto& row : times) {
    for (int j = 0; j < 40; ++j) row.push_back(test_support::uniform_int(rng, 1, 1000));
  }
  for (auto obj : {Objective::kMinimizeMakespan, Objective::kMaximizeCover}) {
    const auto problem = SchedulingProblem::unrelated(times, obj);
    const Solution s = solve(problem, SolveMode::approx(Rational(1, 4)));
    EXPECT_TRUE(test_support::is_partition(s.schedule, 3, 40));
    EXPECT_EQ(problem.evaluate(s.schedule.assignment()), s.value);
  }
}

}  // namespace
}  // namespace mms::sched
