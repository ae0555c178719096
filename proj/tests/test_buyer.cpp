#include <bundlerev/buyer.hpp>

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace bundlerev;

TEST(Buyer, PicksUtilityMaximizer) {
  const Menu m = Menu::two(4, 4, 8);
  const auto out = buyer_choice(m, Valuation{5, 3});
  EXPECT_EQ(out.bundle, Bundle::of({1}));
  EXPECT_EQ(out.payment, 4);
  EXPECT_EQ(out.utility, 1);
}

TEST(Buyer, TiesGoToHigherPayment) {
  // Utility 0 from nothing, item 1 and the bundle: the bundle pays most.
  const auto out = buyer_choice(Menu::two(2, 5, 7), Valuation{2, 5});
  EXPECT_EQ(out.bundle, Bundle::of({1, 2}));
  EXPECT_EQ(out.payment, 7);
}

TEST(Buyer, EqualPaymentTiesGoToLargerBundle) {
  const auto out = buyer_choice(Menu::two(3, 3, 3), Valuation{3, 0});
  EXPECT_EQ(out.bundle, Bundle::of({1, 2}));
}

TEST(Buyer, EqualPaymentAndSizeTiesGoToLexSmaller) {
  const auto out = buyer_choice(Menu::two(3, 3, 9), Valuation{4, 4});
  EXPECT_EQ(out.bundle, Bundle::of({1}));
}

TEST(Buyer, ZeroUtilityPurchaseBeatsNothing) {
  const auto out = buyer_choice(Menu::two(2, 9, 9), Valuation{2, 0});
  EXPECT_EQ(out.bundle, Bundle::of({1}));
  EXPECT_EQ(revenue_at(Menu::two(2, 9, 9), Valuation{1, 0}), 0);
}

TEST(Buyer, ExpectedRevenueAndSaleProbabilities) {
  const auto d = product({SingleItemDistribution::uniform({1, 2}), SingleItemDistribution::uniform({1, 2})});
  const Menu m = Menu::two(2, 2, 3);
  EXPECT_EQ(expected_revenue(m, d), ratio(9, 4));
  const auto sales = sale_probabilities(m, d);
  Rational total = 0;
  for (const auto& [mask, p] : sales) total += p;
  EXPECT_EQ(total, 1);
  EXPECT_EQ(sales.at(3), ratio(3, 4));
}

TEST(Regions, PartitionMatchesBuyerChoice) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> price(0, 12), value(0, 40);
  for (int trial = 0; trial < 200; ++trial) {
    const Menu m = normalize(Menu::two(price(rng), price(rng), price(rng)));
    const auto p = region_partition_2(m);
    for (int k = 0; k < 50; ++k) {
      const Valuation v{ratio(value(rng), 2), ratio(value(rng), 2)};
      EXPECT_EQ(p.region_of(v).bundle, buyer_choice(m, v).bundle) << m.to_string() << " at " << v.to_string();
    }
  }
}

TEST(Regions, ShapeAndNormalizationGuard) {
  EXPECT_EQ(region_partition_2(Menu::two(15, 45, 80)).shape, MenuShape::supermodular);
  EXPECT_EQ(region_partition_2(Menu::two(27, 70, 85)).shape, MenuShape::submodular);
  EXPECT_EQ(region_partition_2(Menu::two(1, 2, 3)).shape, MenuShape::additive);
  EXPECT_THROW(region_partition_2(Menu::two(9, 1, 5)), ModelError);
}

TEST(Monotonicity, SupermodularMenuViolatesAtKnownPair) {
  const Menu m = Menu::two(5, 1, 10);
  EXPECT_EQ(revenue_at(m, Valuation{5, 0}), 5);
  EXPECT_EQ(revenue_at(m, Valuation{5, ratio(9, 2)}), 1);
  const auto report = check_monotone(m, {Valuation{5, 0}, Valuation{5, ratio(9, 2)}});
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].low, (Valuation{5, 0}));
  EXPECT_EQ(report.pairs_checked, 1u);
}

TEST(Monotonicity, SubmodularMenusAreMonotoneOnTheirGrid) {
  const auto d = product({SingleItemDistribution::uniform({0, 3, 7}), SingleItemDistribution::uniform({1, 6})});
  for (const Menu& m : {Menu::two(4, 4, 6), Menu::two(27, 70, 85), Menu::two(2, 5, 7)})
    EXPECT_TRUE(check_monotone(m, monotonicity_grid(m, d, ratio(1, 2))).monotone()) << m.to_string();
}

TEST(Monotonicity, GridContainsCorners) {
  const Menu m = Menu::two(5, 1, 10);
  const auto d = product({SingleItemDistribution::point_mass(2), SingleItemDistribution::point_mass(3)});
  const auto g = monotonicity_grid(m, d, ratio(1, 2));
  EXPECT_NE(std::find(g.begin(), g.end(), Valuation{5, ratio(9, 2)}), g.end());
  EXPECT_NE(std::find(g.begin(), g.end(), Valuation{5, 0}), g.end());
}

}  // namespace
