#pragma once

#include <bundlerev/model.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace bundlerev {

/// A construction produced a menu earning less than its input. This would
/// falsify the theorem the construction implements; the message carries the
/// full instance.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ConstructionCertificate {
  std::string construction;
  Menu input;
  std::string branch;               // which case of the proof fired
  std::vector<Menu> candidates;     // menus compared by the proof
  std::vector<Rational> candidate_revenues;
  Rational input_revenue;
  Menu output;
  Rational output_revenue;

  Rational margin() const { return output_revenue - input_revenue; }
  nlohmann::json to_json() const;
};

/// Replaces a strictly supermodular two-item menu by one of the additive menus
/// (a, b, a+b) or (c-b, b, c), chosen by comparing
///   Pr[v1 in [a, c-b)]·a  against  Pr[v1 >= c-b]·(c-(a+b))
/// after relabeling items so that a <= b. Submodular inputs come back
/// unchanged. Non-normalized inputs are normalized first.
ConstructionCertificate submodularize2(const Menu& m, const SingleItemDistribution& first,
                                       const SingleItemDistribution& second);

/// Symmetric menu earning at least as much as `m` when both values are drawn
/// independently from `f`. Supermodular inputs are first submodularized.
/// With a < b <= c:
///   c <= 2a : the better of (a,a,c) and (b,b,c); their revenues average to
///             that of (a,b,c), which is asserted.
///   c >  2a : if 2a·Pr[a <= v < c-a] >= (c-2a)·Pr[v >= c-a], the better of
///             (b,b,c) and (a,a,2a); otherwise the better of (b,b,c) and
///             (c-a,c-a,2c-2a).
ConstructionCertificate symmetrize2(const Menu& m, const SingleItemDistribution& f);

struct ThreeHalvesSplit {
  Menu additive;     // (p1, p2, p1+p2)
  Menu bundle_only;  // (p, p, p) with p = 2·p12 - p1 - p2
};

/// Requires a strictly supermodular two-item menu.
ThreeHalvesSplit three_halves_decomposition(const Menu& m);

struct Dominance {
  Menu best;
  Rational best_revenue;
  Rational margin;  // best revenue minus baseline revenue
};

/// Best candidate by expected revenue (first listed wins ties).
Dominance verify_dominance(const std::vector<Menu>& candidates, const Menu& baseline, const JointDistribution& d);

/// rev(a,a,c) + rev(b,b,c) - 2·rev(a,b,c); zero whenever c <= 2a for any
/// symmetric joint distribution.
Rational symmetric_average_defect(const Menu& m, const JointDistribution& d);

}  // namespace bundlerev
