#pragma once

#include <bundlerev/model.hpp>

#include <map>
#include <string>
#include <vector>

namespace bundlerev {

struct BuyerOutcome {
  Bundle bundle;  // empty when nothing is bought
  Rational payment;
  Rational utility;
};

/// Utility-maximizing bundle. Ties go to the higher payment, then to the
/// larger bundle, then to the lexicographically smaller item list.
BuyerOutcome buyer_choice(const Menu& m, const Valuation& v);

Rational revenue_at(const Menu& m, const Valuation& v);

Rational expected_revenue(const Menu& m, const JointDistribution& d);

/// Probability that each bundle is bought (the empty bundle included).
std::map<std::uint32_t, Rational> sale_probabilities(const Menu& m, const JointDistribution& d);

// ---------------------------------------------------------------------------
// Two-item region geometry.

/// coef1·v1 + coef2·v2 >= rhs (or > rhs when strict).
struct HalfPlane {
  Rational coef1;
  Rational coef2;
  Rational rhs;
  bool strict = false;

  bool contains(const Rational& v1, const Rational& v2) const;
};

enum class MenuShape { submodular, supermodular, additive };

std::string to_string(MenuShape s);

struct Region {
  Bundle bundle;
  std::vector<HalfPlane> constraints;  // conjunction

  bool contains(const Valuation& v) const;
};

struct NamedPoint {
  std::string label;
  Rational v1;
  Rational v2;
};

struct RegionPartition2 {
  Menu menu;
  MenuShape shape;
  std::vector<Region> regions;       // none, {1}, {2}, {1,2}
  std::vector<NamedPoint> vertices;  // boundary corners of the partition

  const Region& region_of(const Valuation& v) const;
};

/// Requires a normalized two-item menu (c >= max(a, b)); throws ModelError
/// otherwise.
RegionPartition2 region_partition_2(const Menu& m);

// ---------------------------------------------------------------------------
// Revenue monotonicity.

struct MonotonicityViolation {
  Valuation low;
  Valuation high;
  Rational revenue_low;
  Rational revenue_high;
};

struct MonotonicityReport {
  std::vector<MonotonicityViolation> violations;
  std::size_t pairs_checked = 0;
  bool monotone() const { return violations.empty(); }
};

MonotonicityReport check_monotone(const Menu& m, const std::vector<Valuation>& grid);

/// Support points plus every corner coordinate of the two-item partition
/// (0, a, b, c-a, c-b, c and the support coordinates), each also shifted by
/// ±offset, combined as a product grid.
std::vector<Valuation> monotonicity_grid(const Menu& m, const JointDistribution& d, const Rational& offset);

}  // namespace bundlerev
