#include <bundlerev/model.hpp>

#include <gtest/gtest.h>

namespace {

using namespace bundlerev;

TEST(Bundle, CanonicalOrderIsBySizeThenLexicographic) {
  std::vector<std::string> keys;
  for (Bundle s : canonical_bundles(3)) keys.push_back(s.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"1", "2", "3", "1,2", "1,3", "2,3", "1,2,3"}));
}

TEST(Bundle, KeysRoundTrip) {
  for (Bundle s : canonical_bundles(4)) EXPECT_EQ(Bundle::from_key(s.key(), 4), s);
  EXPECT_THROW(Bundle::from_key("1,5", 4), ModelError);
}

TEST(Bundle, TiePreferenceFavorsLargerThenLexSmaller) {
  EXPECT_TRUE(preferred_on_tie(Bundle::of({1, 2}), Bundle::of({1})));
  EXPECT_TRUE(preferred_on_tie(Bundle::of({1}), Bundle::of({2})));
  EXPECT_TRUE(preferred_on_tie(Bundle::of({1, 3}), Bundle::of({2, 3})));
  EXPECT_FALSE(preferred_on_tie(Bundle::of({2}), Bundle::of({2})));
}

TEST(Valuation, RejectsNegativeValues) {
  EXPECT_THROW(Valuation({1, -1}), ModelError);
  const Valuation v{1, ratio(5, 2)};
  EXPECT_EQ(v.of(Bundle::of({1, 2})), ratio(7, 2));
  EXPECT_TRUE(v.dominated_by(Valuation{1, 3}));
  EXPECT_FALSE(v.dominated_by(Valuation{0, 3}));
}

TEST(SingleItem, MergesDuplicatesAndChecksMass) {
  const auto f = SingleItemDistribution::uniform({3, 1, 3});
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.atoms()[0].value, 1);
  EXPECT_EQ(f.atoms()[1].prob, ratio(2, 3));
  EXPECT_EQ(f.prob_at_least(2), ratio(2, 3));
  EXPECT_EQ(f.prob_in(0, 3), ratio(1, 3));
  EXPECT_THROW(SingleItemDistribution({{1, ratio(1, 2)}}), ModelError);
  EXPECT_THROW(SingleItemDistribution({{1, ratio(3, 2)}, {2, ratio(-1, 2)}}), ModelError);
  EXPECT_THROW(SingleItemDistribution(std::vector<ValueAtom>{}), ModelError);
}

TEST(Joint, ProductMarginalsRoundTrip) {
  const auto f = SingleItemDistribution::uniform({0, 2});
  const auto g = SingleItemDistribution::uniform({1, 1, 5});
  const auto d = product({f, g});
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.marginal(0), f);
  EXPECT_EQ(d.marginal(1), g);
  EXPECT_FALSE(d.is_symmetric());
  EXPECT_TRUE(product({f, f}).is_symmetric());
}

TEST(Joint, PermutationSwapsCoordinates) {
  const JointDistribution d(2, {{Valuation{1, 2}, ratio(1, 3)}, {Valuation{3, 4}, ratio(2, 3)}});
  const std::vector<int> swap{1, 0};
  const auto p = d.permuted(swap);
  EXPECT_EQ(p.atoms()[0].values, (Valuation{2, 1}));
  EXPECT_EQ(p.permuted(swap), d);
}

TEST(Joint, MixtureWeightsSupports) {
  const auto a = product({SingleItemDistribution::point_mass(1)});
  const auto b = product({SingleItemDistribution::point_mass(2)});
  const auto m = mixture(a, b, ratio(1, 4));
  EXPECT_EQ(m.marginal(0).prob_at_least(2), ratio(3, 4));
}

TEST(Joint, RejectsWrongArityAndMass) {
  EXPECT_THROW(JointDistribution(2, {{Valuation{1}, 1}}), ModelError);
  EXPECT_THROW(JointDistribution(1, {{Valuation{1}, ratio(1, 2)}}), ModelError);
}

TEST(Menu, ShapePredicates) {
  EXPECT_TRUE(is_submodular(Menu::two(4, 4, 8)));
  EXPECT_TRUE(is_additive(Menu::two(4, 4, 8)));
  EXPECT_FALSE(is_submodular(Menu::two(4, 4, 100)));
  EXPECT_TRUE(is_subadditive(Menu::two(4, 5, 6)));
  EXPECT_TRUE(is_symmetric(Menu::two(3, 3, 5)));
  EXPECT_FALSE(is_symmetric(Menu::two(1, 10, 100)));
  EXPECT_TRUE(is_bundle_only(Menu::two(7, 7, 7)));
  EXPECT_FALSE(is_bundle_monotone(Menu::two(9, 1, 5)));
  EXPECT_THROW(Menu::two(-1, 1, 1), ModelError);
  EXPECT_THROW(Menu(2, {1, 2}), ModelError);
}

TEST(Menu, NormalizeAndClosure) {
  EXPECT_EQ(normalize(Menu::two(9, 1, 5)), Menu::two(5, 1, 5));
  const Menu m(3, {5, 1, 1, 4, 9, 2, 3});
  const Menu c = monotone_closure(m);
  EXPECT_TRUE(is_bundle_monotone(c));
  for (Bundle s : canonical_bundles(3)) EXPECT_LE(c.price(s), m.price(s));
  EXPECT_EQ(Menu::two(1, 2, 3).swapped(), Menu::two(2, 1, 3));
  EXPECT_EQ(Menu::two(1, 2, 3).to_string(), "(1, 2, 3)");
}

}  // namespace
