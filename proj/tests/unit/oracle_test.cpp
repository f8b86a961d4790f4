#include <gtest/gtest.h>

#include "mms/error.hpp"
#include "mms/fixtures.hpp"
#include "mms/oracle.hpp"
#include "random_instances.hpp"

namespace mms {
namespace {

TEST(Odometer, VisitsEveryAssignmentOnceInBaseNOrder) {
  oracle::AssignmentOdometer odometer(3, 2);
  std::vector<std::vector<std::size_t>> seen{odometer.assignment()};
  while (odometer.next([](std::size_t, std::size_t, std::size_t) {})) {
    seen.push_back(odometer.assignment());
  }
  ASSERT_EQ(seen.size(), 9u);
  EXPECT_EQ(seen[1], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(seen[3], (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(seen[8], (std::vector<std::size_t>{2, 2}));
}

TEST(Oracle, StateCap) {
  oracle::Options options;
  options.state_cap = 1000;
  EXPECT_EQ(oracle::assignment_count(3, 6, options), 729u);
  try {
    oracle::assignment_count(3, 7, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_THROW(oracle::enumerate_optimal_ratio(fixtures::three_agent_labels(), options), Error);
}

TEST(Oracle, GuaranteeOfLabelFixture) {
  const Instance instance = fixtures::three_agent_labels();
  EXPECT_EQ(oracle::enumerate_guarantee(instance, 0, Share::kMinMax).value,
            Rational(4'055'000));
}

TEST(Oracle, SingleAgent) {
  const Instance instance = make_instance(Kind::kGoods, {{1, 2, 3}});
  EXPECT_EQ(oracle::enumerate_guarantee(instance, 0, Share::kMaxMin).value, Rational(6));
  const RatioResult ratio = oracle::enumerate_optimal_ratio(instance);
  EXPECT_EQ(ratio.lambda, RatioValue::finite(1));
  EXPECT_TRUE(oracle::mms_allocation_search(instance).has_value());
}

// Existence for I and -J, non-existence for -I and J.
TEST(Oracle, ExistenceQuadrant) {
  const Instance i = fixtures::three_agent_labels();
  const Instance j = fixtures::three_agent_labels_subtracted();
  EXPECT_TRUE(oracle::mms_allocation_search(i).has_value());
  EXPECT_FALSE(oracle::mms_allocation_search(negate_instance(i)).has_value());
  EXPECT_FALSE(oracle::mms_allocation_search(j).has_value());
  EXPECT_TRUE(oracle::mms_allocation_search(negate_instance(j)).has_value());
}

TEST(Oracle, TwoAgentRatios) {
  for (const Rational& r : {Rational(2), Rational(5), Rational(7, 2)}) {
    const RatioResult goods = oracle::enumerate_optimal_ratio(fixtures::two_agent_ratio(r));
    EXPECT_EQ(goods.lambda, RatioValue::finite(r));
    EXPECT_EQ(goods.allocation, Allocation::from_bundles({{0}, {1}}, 2));
    const RatioResult chores =
        oracle::enumerate_optimal_ratio(fixtures::two_agent_ratio(r, Kind::kChores));
    EXPECT_EQ(chores.lambda, RatioValue::finite(r.reciprocal()));
    EXPECT_EQ(chores.allocation, Allocation::from_bundles({{1}, {0}}, 2));
  }
}

TEST(Oracle, NegatedLabelRatioIsAboveOneAtMostTwo) {
  const RatioResult r = oracle::enumerate_optimal_ratio(negate_instance(fixtures::three_agent_labels()));
  ASSERT_FALSE(r.lambda.is_infinite());
  EXPECT_GT(r.lambda.value(), Rational(1));
  EXPECT_LE(r.lambda.value(), Rational(2));
}

TEST(Oracle, ZeroAgentConventions) {
  const Instance goods = make_instance(Kind::kGoods, {{0, 0}, {0, 0}});
  EXPECT_TRUE(oracle::enumerate_optimal_ratio(goods).lambda.is_infinite());
  const Instance chores = make_instance(Kind::kChores, {{0, 0}, {-1, -3}});
  EXPECT_EQ(oracle::enumerate_optimal_ratio(chores).lambda, RatioValue::finite(0));
}

// lambda >= 1 (goods) or <= 1 (chores) exactly when an MmS allocation exists,
// and then the ratio witness is one.
TEST(OracleProperty, RatioConsistentWithExistence) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Kind kind = trial % 2 == 0 ? Kind::kGoods : Kind::kChores;
    const Instance instance = test_support::random_small_instance(rng, kind, 3, 6, 5);
    const RatioResult ratio = oracle::enumerate_optimal_ratio(instance);
    const bool exists = oracle::mms_allocation_search(instance).has_value();
    const bool good_ratio = kind == Kind::kGoods
                                ? (ratio.lambda.is_infinite() || ratio.lambda.value() >= 1)
                                : ratio.lambda.value() <= 1;
    EXPECT_EQ(exists, good_ratio);
    if (exists) {
      std::vector<Rational> mms;
      for (std::size_t i = 0; i < instance.n_agents(); ++i) {
        mms.push_back(oracle::enumerate_guarantee(instance, i, Share::kMaxMin).value);
      }
      for (std::size_t i = 0; i < instance.n_agents(); ++i) {
        EXPECT_GE(bundle_utility(instance, i, ratio.allocation.bundle(i)), mms[i]);
      }
    }
  }
}

}  // namespace
}  // namespace mms
