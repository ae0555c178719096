#include <bundlerev/buyer.hpp>
#include <bundlerev/continuous.hpp>
#include <bundlerev/random_instances.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace {

using namespace bundlerev;

TEST(W, RootAndResidual) {
  const double w = solve_w();
  EXPECT_GT(w, 1.2784);
  EXPECT_LT(w, 1.2785);
  EXPECT_LT(std::abs((w - 1) * std::exp(w) - 1), 1e-12);
}

TEST(Er, TailIsCappedAtOne) {
  EXPECT_EQ(er_tail(2, 1), 1.0);
  EXPECT_DOUBLE_EQ(er_tail(2, 8), 0.25);
}

TEST(Er, ParamsValidation) {
  NumericParams p;
  EXPECT_NO_THROW(p.validate(1));
  EXPECT_THROW(p.validate(0), std::invalid_argument);
  p.cap = 0.5;
  EXPECT_THROW(p.validate(1), std::invalid_argument);
  p = {};
  p.grid_points = 10;
  EXPECT_THROW(p.validate(1), std::invalid_argument);
}

TEST(Er, DiscretizationMatchesTailAtGridPoints) {
  NumericParams p;
  p.cap = 1e3;
  p.grid_points = 301;
  const auto f = er_discretize(2, p);
  ASSERT_EQ(f.size(), 301u);
  Rational mass = 0;
  for (const auto& atom : f.atoms()) mass += atom.prob;
  EXPECT_EQ(mass, 1);
  EXPECT_EQ(f.atoms().front().value, 2);
  EXPECT_EQ(f.atoms().back().value, 1000);
  for (std::size_t k = 0; k < f.size(); k += 37) {
    const Rational x = f.atoms()[k].value;
    EXPECT_EQ(f.prob_at_least(x), 2 / x) << k;
  }
  // Every support price earns r exactly.
  EXPECT_EQ(optimal_single_price_revenue(f), 2);
  EXPECT_DOUBLE_EQ(optimal_single_price_revenue(DiscreteF::from(f)), 2.0);
}

// Exact rational oracle for the O(K log K) pair evaluator: ties in the
// buyer model are frequent on integer supports with integer prices.
TEST(PairEvaluator, MatchesExactBuyerModel) {
  random::Rng rng(31);
  std::uniform_int_distribution<int> price(0, 14);
  for (int k = 0; k < 400; ++k) {
    const auto f1 = random::marginal(rng, 6, 10), f2 = random::marginal(rng, 6, 10);
    const Menu m = normalize(Menu::two(price(rng), price(rng), price(rng)));
    const double exact = to_double(expected_revenue(m, product({f1, f2})));
    const double fast = pair_menu_revenue(DiscreteF::from(f1), DiscreteF::from(f2), to_double(m.a()), to_double(m.b()),
                                          to_double(m.c()));
    EXPECT_NEAR(fast, exact, 1e-12) << m.to_string();
  }
}

double brute_bundle_sweep(const DiscreteF& f1, const DiscreteF& f2) {
  double best = 0;
  for (double x : f1.values)
    for (double y : f2.values) {
      const double p = x + y;
      double mass = 0;
      for (std::size_t i = 0; i < f1.values.size(); ++i)
        for (std::size_t j = 0; j < f2.values.size(); ++j)
          if (f1.values[i] + f2.values[j] >= p) mass += f1.probs[i] * f2.probs[j];
      best = std::max(best, p * mass);
    }
  return best;
}

TEST(BundleSweep, ParallelSerialAndBruteForceAgree) {
  random::Rng rng(32);
  for (int k = 0; k < 50; ++k) {
    const auto f1 = DiscreteF::from(random::marginal(rng, 8, 30)), f2 = DiscreteF::from(random::marginal(rng, 8, 30));
    const double brute = brute_bundle_sweep(f1, f2);
    EXPECT_NEAR(bundle_price_sweep_serial(f1, f2), brute, 1e-12);
    EXPECT_NEAR(bundle_price_sweep(f1, f2), brute, 1e-12);
  }
  NumericParams p;
  const auto f = DiscreteF::from(er_discretize(1, p));
  EXPECT_EQ(bundle_price_sweep(f, f), bundle_price_sweep_serial(f, f));
}

TEST(PairSearch, ParallelMatchesSerial) {
  NumericParams p;
  p.grid_points = 400;
  p.cap = 1e3;
  const auto f = DiscreteF::from(er_discretize(1, p));
  const auto singles = capped_support_grid(f.values, 10);
  const auto bundles = capped_support_grid(f.values, 30);
  const auto par = search_pair_menus(f, f, singles, singles, bundles);
  const auto ser = search_pair_menus_serial(f, f, singles, singles, bundles);
  EXPECT_EQ(par.revenue, ser.revenue);
  EXPECT_EQ(par.a, ser.a);
  EXPECT_EQ(par.b, ser.b);
  EXPECT_EQ(par.c, ser.c);
  EXPECT_EQ(par.menus_examined, ser.menus_examined);
  EXPECT_GE(par.c, std::max(par.a, par.b));
}

TEST(PairSearch, CappedGridSnapsToSupport) {
  const std::vector<double> support{0, 1, 2, 4, 8, 16, 32};
  const auto g = capped_support_grid(support, 4);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 32.0);
  for (double x : g) EXPECT_NE(std::find(support.begin(), support.end(), x), support.end());
  EXPECT_EQ(capped_support_grid({0.0}, 5), std::vector<double>{0.0});
}

TEST(ErGap, CapSweepIsNondecreasing) {
  const auto sweep = er_cap_sweep(1, 1, {1e2, 1e3}, 200);
  ASSERT_EQ(sweep.size(), 2u);
  EXPECT_EQ(sweep[0].grid_points_1, 401);
  EXPECT_EQ(sweep[1].grid_points_1, 601);
  EXPECT_GE(sweep[1].brev, sweep[0].brev - 1e-12);
  EXPECT_LT(sweep[1].brev, 2 * solve_w());
  EXPECT_EQ(sweep[0].srev, 2.0);
}

}  // namespace
