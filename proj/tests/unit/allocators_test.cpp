#include <gtest/gtest.h>

#include "mms/allocators.hpp"
#include "mms/error.hpp"
#include "mms/fixtures.hpp"
#include "mms/oracle.hpp"
#include "mms/shares.hpp"
#include "random_instances.hpp"

namespace mms {
namespace {

const sched::SolveMode kExact = sched::SolveMode::exact();

Rational round_robin_bound(std::size_t n) {
  return Rational(2) - Rational(1, static_cast<int>(n));
}

bool passes_lambda(const Instance& instance, const Allocation& allocation,
                   const RatioValue& lambda) {
  return check_allocation(instance, allocation, Criterion::lambda_max_min(lambda),
                          guarantee_profile(instance, kExact))
      .all_pass();
}

TEST(RoundRobin, TightExampleHitsTheBound) {
  for (int n = 2; n <= 6; ++n) {
    const Instance instance = fixtures::tight_round_robin(n, Kind::kChores);
    const Allocation a = round_robin_chores(instance);
    EXPECT_EQ(bundle_utility(instance, 0, a.bundle(0)), -round_robin_bound(n)) << n;
    EXPECT_EQ(guarantee(instance, 0, Share::kMaxMin, kExact).value, Rational(-1));
  }
  const Instance three = fixtures::tight_round_robin(3, Kind::kChores);
  EXPECT_EQ(round_robin_chores(three).bundle(0), (std::vector<std::size_t>{0, 3, 6}));
}

TEST(RoundRobin, SingleAgentTakesAll) {
  const Instance instance = make_instance(Kind::kChores, {{-3, 0, -1}});
  EXPECT_EQ(round_robin_chores(instance), Allocation::all_to(0, 1, 3));
}

TEST(RoundRobin, TiesGoToLowestIndex) {
  const Instance instance = make_instance(Kind::kChores, {{-1, -1, -1}, {-1, -1, -1}});
  EXPECT_EQ(round_robin_chores(instance), Allocation::from_bundles({{0, 2}, {1}}, 3));
}

TEST(RoundRobin, RejectsGoods) {
  try {
    round_robin_chores(fixtures::two_agent_ratio(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKindMismatch);
  }
}

TEST(RoundRobinProperty, WithinTwoMinusOneOverN) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance instance = test_support::random_small_instance(rng, Kind::kChores, 3, 9);
    const Allocation a = round_robin_chores(instance);
    ASSERT_TRUE(test_support::is_partition(a, instance.n_agents(), instance.n_items()));
    EXPECT_TRUE(passes_lambda(instance, a,
                              RatioValue::finite(round_robin_bound(instance.n_agents()))));
  }
}

TEST(OptimalExact, TwoAgentRatio) {
  const RatioResult goods = optimal_mms_exact(fixtures::two_agent_ratio(5));
  EXPECT_EQ(goods.lambda, RatioValue::finite(5));
  EXPECT_EQ(goods.allocation, Allocation::from_bundles({{0}, {1}}, 2));
  const RatioResult chores = optimal_mms_exact(fixtures::two_agent_ratio(5, Kind::kChores));
  EXPECT_EQ(chores.lambda, RatioValue::finite(Rational(1, 5)));
  EXPECT_EQ(chores.allocation, Allocation::from_bundles({{1}, {0}}, 2));
}

TEST(OptimalExact, AllZeroGoodsIsInfinite) {
  const Instance zeros = make_instance(Kind::kGoods, {{0, 0, 0}, {0, 0, 0}});
  const RatioResult r = optimal_mms_exact(zeros);
  EXPECT_TRUE(r.lambda.is_infinite());
  EXPECT_EQ(r.allocation, Allocation::all_to(0, 2, 3));
}

TEST(OptimalExact, ZeroGuaranteeChoresAgentTakesEverything) {
  const Instance chores = make_instance(Kind::kChores, {{-2, -1}, {0, 0}});
  const RatioResult r = optimal_mms_exact(chores);
  EXPECT_EQ(r.lambda, RatioValue::finite(0));
  EXPECT_EQ(r.allocation, Allocation::all_to(1, 2, 2));
}

TEST(OptimalExact, NegatedLabelFixtureAboveOne) {
  const Instance instance = negate_instance(fixtures::three_agent_labels());
  const RatioResult r = optimal_mms_exact(instance);
  ASSERT_FALSE(r.lambda.is_infinite());
  EXPECT_GT(r.lambda.value(), Rational(1));
  EXPECT_EQ(r.lambda, oracle::enumerate_optimal_ratio(instance).lambda);
}

TEST(OptimalExactProperty, MatchesEnumeration) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const Kind kind = trial % 2 == 0 ? Kind::kGoods : Kind::kChores;
    const Instance instance = test_support::random_small_instance(rng, kind, 3, 7);
    const RatioResult got = optimal_mms_exact(instance);
    const RatioResult expected = oracle::enumerate_optimal_ratio(instance);
    EXPECT_EQ(got.lambda, expected.lambda);
    ASSERT_TRUE(test_support::is_partition(got.allocation, instance.n_agents(),
                                           instance.n_items()));
    EXPECT_TRUE(passes_lambda(instance, got.allocation, expected.lambda));
    // An optimal allocation is an MmS allocation whenever one exists.
    if (oracle::mms_allocation_search(instance).has_value()) {
      EXPECT_TRUE(check_allocation(instance, got.allocation, Criterion::mms(),
                                   guarantee_profile(instance, kExact))
                      .all_pass());
    }
  }
}

TEST(OptimalExactProperty, RatioBounds) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const Kind kind = trial % 2 == 0 ? Kind::kGoods : Kind::kChores;
    const Instance instance = test_support::random_small_instance(rng, kind, 3, 7);
    const RatioValue lambda = optimal_mms_exact(instance).lambda;
    if (kind == Kind::kGoods) {
      EXPECT_TRUE(lambda.is_infinite() || lambda.value() >= Rational(2, 3));
    } else {
      ASSERT_FALSE(lambda.is_infinite());
      EXPECT_LE(lambda.value(), Rational(2));
    }
  }
}

TEST(PtasConfig, DefaultsSatisfyConstraints) {
  for (const Rational& eps : {Rational(1, 4), Rational(1, 10), Rational(1, 1000), Rational(1)}) {
    const PtasConfig chores = PtasConfig::defaults(eps, Kind::kChores);
    EXPECT_GT(chores.alpha, Rational(1));
    EXPECT_LT(chores.alpha * chores.beta, Rational(1) + eps);
    const PtasConfig goods = PtasConfig::defaults(eps, Kind::kGoods);
    EXPECT_LT(goods.alpha, Rational(1));
    EXPECT_GT(goods.alpha, Rational(0));
    EXPECT_GT(goods.alpha * goods.beta, Rational(1) - eps);
  }
  const PtasConfig c = PtasConfig::defaults(Rational(1, 4), Kind::kChores);
  EXPECT_EQ(c.alpha, Rational(1'118'033, 1'000'000));
  const PtasConfig g = PtasConfig::defaults(Rational(1, 4), Kind::kGoods);
  EXPECT_EQ(g.alpha, Rational(866'026, 1'000'000));
}

TEST(PtasConfig, ValidateRejectsViolations) {
  const auto code = [](PtasConfig cfg, Kind kind) {
    try {
      cfg.validate(kind);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParseError;
  };
  const Rational eps(1, 4);
  EXPECT_EQ(code({eps, Rational(1), Rational(11, 10)}, Kind::kChores),
            ErrorCode::kConfigViolation);
  EXPECT_EQ(code({eps, Rational(12, 10), Rational(12, 10)}, Kind::kChores),
            ErrorCode::kConfigViolation);
  EXPECT_EQ(code({eps, Rational(9, 10), Rational(1)}, Kind::kGoods), ErrorCode::kConfigViolation);
  EXPECT_EQ(code({eps, Rational(8, 10), Rational(9, 10)}, Kind::kGoods),
            ErrorCode::kConfigViolation);
  EXPECT_EQ(code({Rational(0), Rational(9, 10), Rational(9, 10)}, Kind::kGoods),
            ErrorCode::kConfigViolation);
  EXPECT_THROW(PtasConfig::defaults(Rational(0), Kind::kGoods), Error);
  EXPECT_THROW(optimal_mms_ptas(fixtures::two_agent_ratio(2),
                                {eps, Rational(11, 10), Rational(11, 10)}),
               Error);
}

TEST(Ptas, TwoAgentGoods) {
  const Instance instance = fixtures::two_agent_ratio(2);
  const PtasResult r =
      optimal_mms_ptas(instance, PtasConfig::defaults(Rational(1, 10), Kind::kGoods));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_GE(bundle_utility(instance, i, r.allocation.bundle(i)), Rational(9, 10) * 2);
  }
}

TEST(Ptas, AllZeroGoodsPassesVacuously) {
  const Instance zeros = make_instance(Kind::kGoods, {{0, 0}, {0, 0}, {0, 0}});
  const PtasResult r =
      optimal_mms_ptas(zeros, PtasConfig::defaults(Rational(1, 4), Kind::kGoods));
  EXPECT_TRUE(r.lambda_estimate.is_infinite());
  EXPECT_TRUE(passes_lambda(zeros, r.allocation, RatioValue::infinity()));
}

TEST(Ptas, NegatedLabelFixture) {
  const Instance instance = negate_instance(fixtures::three_agent_labels());
  const Rational eps(1, 4);
  const PtasResult r = optimal_mms_ptas(instance, PtasConfig::defaults(eps, Kind::kChores));
  const RatioValue lambda = oracle::enumerate_optimal_ratio(instance).lambda;
  EXPECT_LT(r.certified_factor, Rational(1) + eps);
  EXPECT_TRUE(passes_lambda(instance, r.allocation, lambda.scaled(Rational(1) + eps)));
}

TEST(PtasProperty, CertifiedAgainstEnumeration) {
  std::mt19937_64 rng(44);
  for (const Rational& eps : {Rational(1, 4), Rational(1, 10)}) {
    for (int trial = 0; trial < 80; ++trial) {
      const Kind kind = trial % 2 == 0 ? Kind::kGoods : Kind::kChores;
      const Instance instance = test_support::random_small_instance(rng, kind, 3, 7);
      const PtasResult r = optimal_mms_ptas(instance, PtasConfig::defaults(eps, kind));
      ASSERT_TRUE(test_support::is_partition(r.allocation, instance.n_agents(),
                                             instance.n_items()));
      const RatioValue lambda = oracle::enumerate_optimal_ratio(instance).lambda;
      const Rational factor = kind == Kind::kGoods ? Rational(1) - eps : Rational(1) + eps;
      EXPECT_TRUE(passes_lambda(instance, r.allocation, lambda.scaled(factor)));
    }
  }
}

}  // namespace
}  // namespace mms
