#include <bundlerev/buyer.hpp>
#include <bundlerev/constructions.hpp>
#include <bundlerev/examples.hpp>
#include <bundlerev/random_instances.hpp>

#include <gtest/gtest.h>

namespace {

using namespace bundlerev;

TEST(Submodularize, SubmodularInputIsUnchanged) {
  const auto f = SingleItemDistribution::uniform({1, 4, 6});
  const auto cert = submodularize2(Menu::two(4, 5, 7), f, f);
  EXPECT_EQ(cert.output, Menu::two(4, 5, 7));
  EXPECT_EQ(cert.margin(), 0);
}

TEST(Submodularize, OutputIsAdditiveCandidateAndNeverLoses) {
  random::Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const auto f1 = random::marginal(rng), f2 = random::marginal(rng);
    const Menu m = random::strictly_supermodular_menu(rng);
    const auto cert = submodularize2(m, f1, f2);
    EXPECT_TRUE(is_submodular(cert.output)) << cert.to_json().dump();
    EXPECT_GE(cert.margin(), 0) << cert.to_json().dump();
    EXPECT_EQ(cert.output_revenue, expected_revenue(cert.output, product({f1, f2})));
    EXPECT_NE(std::find(cert.candidates.begin(), cert.candidates.end(), cert.output), cert.candidates.end());
  }
}

TEST(Submodularize, CertificateSerializes) {
  const auto f = SingleItemDistribution::uniform({0, 3, 5});
  const auto j = submodularize2(Menu::two(1, 2, 9), f, f).to_json();
  for (const char* key : {"input", "branch", "candidates", "output"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Symmetrize, OutputIsSymmetricSubmodularAndNeverLoses) {
  random::Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto f = random::marginal(rng);
    const Menu m = random::asymmetric_submodular_menu(rng);
    const auto cert = symmetrize2(m, f);
    EXPECT_TRUE(is_symmetric(cert.output)) << cert.to_json().dump();
    EXPECT_GE(cert.margin(), 0) << cert.to_json().dump();
  }
}

TEST(Symmetrize, SupermodularInputIsSubmodularizedFirst) {
  const auto f = SingleItemDistribution::uniform({1, 2, 8});
  const auto cert = symmetrize2(Menu::two(1, 2, 9), f);
  EXPECT_TRUE(is_symmetric(cert.output));
  EXPECT_GE(cert.margin(), 0);
}

TEST(Symmetrize, AveragingIdentityHoldsWhenBundleIsCheap) {
  random::Rng rng(13);
  int exercised = 0;
  for (int k = 0; k < 300; ++k) {
    const auto f = random::marginal(rng);
    const Menu m = random::asymmetric_submodular_menu(rng);
    if (m.c() > 2 * std::min(m.a(), m.b())) continue;
    ++exercised;
    EXPECT_EQ(symmetric_average_defect(m, product({f, f})), 0) << m.to_string();
  }
  EXPECT_GT(exercised, 20);
}

TEST(ThreeHalves, DecompositionOnKnownInstance) {
  const auto split = three_halves_decomposition(Menu::two(4, 4, 100));
  EXPECT_EQ(split.additive, Menu::two(4, 4, 8));
  EXPECT_EQ(split.bundle_only, Menu::two(192, 192, 192));
  const auto d = examples::supermodular_gap(ratio(1, 100));
  EXPECT_EQ(expected_revenue(Menu::two(4, 4, 100), d), ratio(592, 100));
  EXPECT_EQ(expected_revenue(split.additive, d), ratio(408, 100));
  EXPECT_EQ(expected_revenue(split.bundle_only, d), ratio(384, 100));
  EXPECT_THROW(three_halves_decomposition(Menu::two(4, 4, 8)), ModelError);
}

TEST(ThreeHalves, BoundHoldsOnRandomCorrelatedJoints) {
  random::Rng rng(14);
  for (int k = 0; k < 300; ++k) {
    const auto d = random::joint(rng, 2);
    const Menu m = random::strictly_supermodular_menu(rng);
    const auto split = three_halves_decomposition(m);
    EXPECT_LE(expected_revenue(m, d), expected_revenue(split.additive, d) + expected_revenue(split.bundle_only, d) / 2)
        << m.to_string();
  }
}

TEST(Dominance, FirstCandidateWinsTies) {
  const auto d = product({SingleItemDistribution::point_mass(3), SingleItemDistribution::point_mass(3)});
  const auto dom = verify_dominance({Menu::two(3, 3, 6), Menu::two(3, 3, 6)}, Menu::two(1, 1, 2), d);
  EXPECT_EQ(dom.best_revenue, 6);
  EXPECT_EQ(dom.margin, 4);
  EXPECT_THROW(verify_dominance({}, Menu::two(1, 1, 2), d), ModelError);
}

}  // namespace
