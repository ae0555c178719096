#pragma once

#include <bundlerev/randomized.hpp>
#include <bundlerev/search.hpp>

#include <vector>

// Reference instances. Each one also ships under data/ and a test keeps the
// two in sync.
namespace bundlerev::examples {

/// Uniform over the multiset {0, 1, 2, 2, 2, 2, 5, 6, 6, 6}.
SingleItemDistribution three_item_marginal();
/// Three IID copies of three_item_marginal().
JointDistribution three_item_iid();

struct PublishedOptimum {
  SearchConstraint constraint;
  Rational revenue;
  Menu menu;
};

/// Published optimal menus and revenues of three_item_iid() per constraint.
std::vector<PublishedOptimum> three_item_optima();

/// (4,0) and (0,4) w.p. 1/2 − ε each, (1/ε, 1/ε) w.p. 2ε.
JointDistribution supermodular_gap(const Rational& eps);

/// (1/ε², 1/ε²) w.p. ε², (1/ε, 0) and (0, 1/ε) w.p. ε/2 each, (1, 1) otherwise.
JointDistribution asymmetry_gap(const Rational& eps);
/// (1, 1/ε, 1/ε²).
Menu asymmetry_gap_menu(const Rational& eps);

/// Six-atom marginal of the lottery instance.
SingleItemDistribution lottery_marginal();
/// Two IID copies of lottery_marginal(): 36 types.
JointDistribution lottery_types();
/// The 11-entry optimal lottery menu for lottery_types(), null entry first.
RandomizedMenu lottery_menu();
/// Buyer (46, 80) and the two entries of the false-name deviation.
Valuation lottery_buyer();
inline constexpr std::size_t kDeviationFirst = 1, kDeviationSecond = 2;

/// Menus drawn in the region-partition figure.
Menu figure_supermodular();  // (15, 45, 80)
Menu figure_submodular();    // (27, 70, 85)

}  // namespace bundlerev::examples
