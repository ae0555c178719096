#include <bundlerev/buyer.hpp>
#include <bundlerev/examples.hpp>
#include <bundlerev/random_instances.hpp>
#include <bundlerev/randomized.hpp>
#include <bundlerev/search.hpp>

#include <gtest/gtest.h>

namespace {

using namespace bundlerev;

LotteryEntry entry(std::vector<Rational> alloc, Rational pay) { return {std::move(alloc), std::move(pay)}; }

TEST(RandomizedMenu, AppendsNullEntryWhenMissing) {
  const RandomizedMenu m(1, {entry({ratio(1, 2)}, 1)});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_TRUE(m[1].is_null());
  const RandomizedMenu with_null(1, {entry({0}, 0), entry({1}, 2)});
  EXPECT_EQ(with_null.size(), 2u);
}

TEST(RandomizedMenu, ValidatesEntries) {
  EXPECT_THROW(RandomizedMenu(1, {entry({ratio(3, 2)}, 1)}), ModelError);
  EXPECT_THROW(RandomizedMenu(1, {entry({1}, -1)}), ModelError);
  EXPECT_THROW(RandomizedMenu(2, {entry({1}, 1)}), ModelError);
}

TEST(RandomizedMenu, FromMenuAgreesWithDeterministicBuyer) {
  const Menu m = Menu::two(4, 5, 7);
  const auto r = RandomizedMenu::from_menu(m);
  EXPECT_EQ(r.size(), 4u);
  EXPECT_TRUE(r[0].is_null());
  const auto d = product({SingleItemDistribution::uniform({0, 3, 6}), SingleItemDistribution::uniform({2, 5})});
  EXPECT_EQ(expected_revenue(r, d), expected_revenue(m, d));
}

TEST(RandomizedMenu, JsonRoundTrip) {
  const auto m = examples::lottery_menu();
  EXPECT_EQ(parse_randomized_menu(to_json(m)).entries(), m.entries());
}

TEST(Rchoice, TiesGoToHigherPaymentThenLowerIndex) {
  const RandomizedMenu m(1, {entry({0}, 0), entry({ratio(1, 2)}, 1), entry({1}, 2), entry({1}, 2)});
  const auto c = rchoice(m, Valuation{2});
  EXPECT_EQ(c.utility, 0);
  EXPECT_EQ(c.index, 2u);
}

TEST(Rchoice, KnownLotteryBuyer) {
  const auto c = rchoice(examples::lottery_menu(), examples::lottery_buyer());
  EXPECT_EQ(c.utility, ratio(1152, 1187));
  EXPECT_EQ(c.index, 6u);
}

TEST(FalseName, RuleNames) {
  EXPECT_EQ(parse_rule("capped"), CombinationRule::capped_additive);
  EXPECT_EQ(parse_rule("independent"), CombinationRule::independent_lotteries);
  EXPECT_EQ(parse_rule(to_string(CombinationRule::independent_lotteries)), CombinationRule::independent_lotteries);
  EXPECT_THROW(parse_rule("other"), std::invalid_argument);
}

TEST(FalseName, CombinationRules) {
  const RandomizedMenu m(1, {entry({ratio(1, 2)}, 1)});
  const Valuation v{4};
  // Two half-lotteries: capped sums to 1, independent gives 3/4.
  EXPECT_EQ(false_name_utility(m, v, {0, 0}, CombinationRule::capped_additive), 2);
  EXPECT_EQ(false_name_utility(m, v, {0, 0}, CombinationRule::independent_lotteries), 1);
  EXPECT_EQ(false_name_utility(m, v, {0}, CombinationRule::independent_lotteries), entry_utility(m[0], v));
  EXPECT_THROW(false_name_utility(m, v, {}, CombinationRule::capped_additive), ModelError);
  EXPECT_THROW(false_name_utility(m, v, {7}, CombinationRule::capped_additive), ModelError);
}

TEST(FalseName, LotteryMenuAdmitsProfitableDeviation) {
  const auto m = examples::lottery_menu();
  const auto v = examples::lottery_buyer();
  const Rational two = false_name_utility(m, v, {examples::kDeviationFirst, examples::kDeviationSecond},
                                          CombinationRule::independent_lotteries);
  EXPECT_GT(two, ratio(1152, 1187));
  const auto best = best_false_name_deviation(m, v, CombinationRule::independent_lotteries, 2);
  EXPECT_TRUE(best.improves());
  EXPECT_GE(best.utility, two);
  EXPECT_EQ(best.utility, false_name_utility(m, v, best.picks, CombinationRule::independent_lotteries));
}

TEST(FalseName, SubadditiveDeterministicMenuIsSafeUnderCapping) {
  random::Rng rng(41);
  std::uniform_int_distribution<int> value(0, 12);
  for (int k = 0; k < 60; ++k) {
    const Menu m = random::submodular_menu(rng, 10);
    const auto r = RandomizedMenu::from_menu(m);
    const Valuation v{value(rng), value(rng)};
    const auto best = best_false_name_deviation(r, v, CombinationRule::capped_additive, 3);
    EXPECT_FALSE(best.improves()) << m.to_string() << " at " << v.to_string();
  }
}

TEST(FalseName, RefusesLargeK) {
  const auto m = examples::lottery_menu();
  EXPECT_THROW(best_false_name_deviation(m, examples::lottery_buyer(), CombinationRule::capped_additive, 4), ModelError);
  EXPECT_THROW(best_false_name_deviation(m, examples::lottery_buyer(), CombinationRule::capped_additive, 0), ModelError);
}

TEST(IcIr, NullMechanismPasses) {
  const auto d = examples::lottery_types();
  DirectMechanism null;
  for (std::size_t t = 0; t < d.size(); ++t) {
    null.alloc.push_back({0, 0});
    null.pay.push_back(0);
  }
  const auto rep = verify_ic_ir(null, d);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.violation_count, 0u);
}

TEST(IcIr, FullSurplusExtractionFailsIc) {
  const auto d = product({SingleItemDistribution::uniform({1, 3}), SingleItemDistribution::uniform({2, 4})});
  DirectMechanism grab;
  for (const auto& atom : d.atoms()) {
    grab.alloc.push_back({1, 1});
    grab.pay.push_back(atom.values.of(Bundle::full(2)));
  }
  const auto rep = verify_ic_ir(grab, d);
  EXPECT_FALSE(rep.ok);
  EXPECT_GT(rep.violation_count, 0u);
  EXPECT_EQ(rep.violations.front().kind, IcViolation::Kind::ic);
}

TEST(IcIr, FloatingCheckRespectsTolerance) {
  const auto d = product({SingleItemDistribution::point_mass(2)});
  DirectMechanismF m{{{1.0}}, {2.0 + 1e-12}};
  EXPECT_TRUE(verify_ic_ir(m, d).ok);
  m.pay[0] = 2.1;
  EXPECT_FALSE(verify_ic_ir(m, d).ok);
}

TEST(IcIr, BundledLotteryMenuIsIcOnItsTypes) {
  const auto d = examples::lottery_types();
  EXPECT_TRUE(verify_ic_ir(mechanism_from_menu(examples::lottery_menu(), d), d).ok);
}

TEST(Lp, SingleItemPointMass) {
  const auto d = product({SingleItemDistribution::point_mass(3)});
  for (auto method : {LpMethod::exact, LpMethod::floating}) EXPECT_EQ(lp_optimal(d, method).revenue, 3);
}

TEST(Lp, UniformOneTwoEarnsOne) {
  const auto d = product({SingleItemDistribution::uniform({1, 2})});
  const auto r = lp_optimal(d);
  EXPECT_EQ(r.revenue, 1);
  EXPECT_TRUE(verify_ic_ir(r.mechanism, d).ok);
}

TEST(Lp, DominatesDeterministicSearchAndIsIc) {
  random::Rng rng(42);
  for (int k = 0; k < 25; ++k) {
    const auto d = random::joint(rng, 2, 5, 6);
    const auto det = search_optimal(d, SearchConstraint::unrestricted, candidate_grid(d, GridMode::support_sums));
    const auto exact = lp_optimal(d, LpMethod::exact);
    EXPECT_GE(exact.revenue, det.revenue);
    EXPECT_TRUE(verify_ic_ir(exact.mechanism, d).ok);
    EXPECT_EQ(expected_payment(exact.mechanism, d), exact.revenue);
    const auto fl = lp_optimal(d, LpMethod::floating);
    EXPECT_EQ(fl.revenue, exact.revenue);
    EXPECT_NEAR(fl.float_revenue, to_double(exact.revenue), 1e-9);
  }
}

TEST(Lp, InvariantUnderItemRelabeling) {
  random::Rng rng(43);
  const std::vector<int> swap{1, 0};
  for (int k = 0; k < 10; ++k) {
    const auto d = random::joint(rng, 2, 5, 6);
    EXPECT_EQ(lp_optimal(d).revenue, lp_optimal(d.permuted(swap)).revenue);
  }
}

TEST(Lp, LotteryInstanceMatchesMenuRevenue) {
  const auto d = examples::lottery_types();
  const Rational target = expected_revenue(examples::lottery_menu(), d);
  const auto fl = lp_optimal(d, LpMethod::floating);
  EXPECT_EQ(fl.revenue, target);
  EXPECT_TRUE(fl.certified);
  EXPECT_FALSE(fl.fell_back);
}

}  // namespace
