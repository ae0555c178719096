#pragma once

#include <bundlerev/model.hpp>
#include <bundlerev/search.hpp>

#include <random>

namespace bundlerev::random {

using Rng = std::mt19937_64;

/// 1..max_atoms distinct integer values in [0, max_value], integer weights
/// in [1, 10] normalized to mass 1.
SingleItemDistribution marginal(Rng& rng, int max_atoms = 5, int max_value = 20);

/// 1..max_atoms distinct integer valuation vectors with coordinates in
/// [0, max_value]; arbitrary correlation.
JointDistribution joint(Rng& rng, int n, int max_atoms = 6, int max_value = 20);

/// Two-item menu with c > a + b, integer prices up to 2·max_value.
Menu strictly_supermodular_menu(Rng& rng, int max_value = 20);

/// Two-item menu with a != b and max(a, b) <= c <= a + b.
Menu asymmetric_submodular_menu(Rng& rng, int max_value = 20);

/// Two-item menu with max(a, b) <= c <= a + b.
Menu submodular_menu(Rng& rng, int max_value = 20);

/// Small explicit grid (at most max_combinations menus) over prices drawn
/// from {0, 1/2, 1, ..., max_value}; n = 2 or 3. With `symmetric_sets`,
/// bundles of equal size share one candidate set.
CandidateGrid small_grid(Rng& rng, int n, std::uint64_t max_combinations = 200, int max_value = 8,
                         bool symmetric_sets = false);

}  // namespace bundlerev::random
