#pragma once

#include <bundlerev/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

// Seeded randomized checks of the structural results. Each suite is
// deterministic in its seed.
namespace bundlerev::properties {

struct Report {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::size_t side_checks = 0;  // suite-specific secondary checks that ran
  Rational min_margin;          // smallest revenue margin seen (where defined)
  std::string first_violation;

  bool ok() const { return cases > 0 && violations == 0; }
};

/// Strictly supermodular menus on random products: submodularize2 never loses revenue.
Report submodularization(std::uint64_t seed, std::size_t cases);

/// Asymmetric submodular menus on random IID pairs: symmetrize2 never loses
/// revenue; side_checks counts the c <= 2a averaging identities verified.
Report symmetrization(std::uint64_t seed, std::size_t cases);

/// Strictly supermodular menus on random correlated pairs:
/// rev(m) <= rev(additive part) + rev(bundle part) / 2.
Report three_halves(std::uint64_t seed, std::size_t cases);

/// Submodular menus: no revenue monotonicity violation on the support plus
/// partition-corner grid of a random product.
Report monotonicity(std::uint64_t seed, std::size_t cases);

/// search_optimal against search_naive on small random grids and constraints;
/// `cases` counts feasible instances compared.
Report oracle_equivalence(std::uint64_t seed, std::size_t cases);

}  // namespace bundlerev::properties
