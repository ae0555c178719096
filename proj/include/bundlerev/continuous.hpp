#pragma once

#include <bundlerev/model.hpp>

#include <vector>

namespace bundlerev {

/// Root of (w-1)·e^w = 1 on [1, 2]: bisection, then Newton polish.
double solve_w();

/// Pr[v >= p] = min{1, r/p} for the equal revenue distribution ER_r.
double er_tail(double r, double p);

struct NumericParams {
  double cap = 1e4;           // truncation point
  int grid_points = 2001;     // atoms of each discretized marginal
  double tolerance = 0.01;    // relative agreement required between drev and brev
  int single_candidates = 24; // item price candidates in the drev search
  int bundle_candidates = 96; // bundle price candidates in the drev search

  void validate(double r) const;
};

/// Atoms at r·(cap/r)^(k/(K-1)), k = 0..K-1. Atom k carries
/// tail(x_k) - tail(x_{k+1}); the last atom carries the residual tail r/cap.
/// Masses are exact rationals of the binary64 grid points, so they sum to 1
/// exactly and Pr[v >= x_k] equals the ER tail at every grid point.
SingleItemDistribution er_discretize(double r, const NumericParams& params);

/// Floating-point view of a discrete single-item distribution.
struct DiscreteF {
  std::vector<double> values;  // ascending
  std::vector<double> probs;

  static DiscreteF from(const SingleItemDistribution& d);
  double prob_at_least(double p) const;
};

/// max over support prices of p·Pr[v >= p].
double optimal_single_price_revenue(const DiscreteF& f);
Rational optimal_single_price_revenue(const SingleItemDistribution& f);

/// Pr[v1 + v2 >= p] maximized over all support sums p of an independent pair.
/// The sweep is split across OpenMP threads over disjoint price ranges.
double bundle_price_sweep(const DiscreteF& first, const DiscreteF& second);
double bundle_price_sweep_serial(const DiscreteF& first, const DiscreteF& second);

/// Expected revenue of the two-item menu (a, b, c), c >= max(a, b), for
/// independent values. O(K log K) per menu: for each v1 the buyer switches
/// from the best flat option (nothing or item 1) to the best option that
/// grows with v2 (item 2 or the bundle) at a single threshold.
double pair_menu_revenue(const DiscreteF& first, const DiscreteF& second, double a, double b, double c);

struct PairSearchResult {
  double revenue = 0;
  double a = 0, b = 0, c = 0;
  std::size_t menus_examined = 0;
};

/// Best normalized two-item menu whose item prices come from `singles_k` and
/// bundle price from `bundles`; item prices above the bundle price collapse
/// to the bundle price.
PairSearchResult search_pair_menus(const DiscreteF& first, const DiscreteF& second,
                                   const std::vector<double>& singles_1, const std::vector<double>& singles_2,
                                   const std::vector<double>& bundles);
PairSearchResult search_pair_menus_serial(const DiscreteF& first, const DiscreteF& second,
                                          const std::vector<double>& singles_1, const std::vector<double>& singles_2,
                                          const std::vector<double>& bundles);

/// `count` log-spaced targets between the smallest and largest positive
/// support value, each snapped to the nearest support value, plus 0.
std::vector<double> capped_support_grid(const std::vector<double>& support, int count);

struct ErGapReport {
  double r1 = 0, r2 = 0;
  double cap = 0;
  int grid_points = 0;
  double srev = 0;
  double brev = 0;
  double drev = 0;
  PairSearchResult drev_menu;
  double w = 0;

  double brev_over_srev() const { return brev / srev; }
  double drev_over_srev() const { return drev / srev; }
  bool drev_matches_brev(double tolerance) const;
};

ErGapReport numeric_gap_er(double r1, double r2, const NumericParams& params);

struct CapSweepPoint {
  double cap = 0;
  int grid_points_1 = 0, grid_points_2 = 0;
  double srev = 0;
  double brev = 0;
};

/// Bundle revenue for caps sharing one geometric step (points per decade).
/// When cap/r is a power of ten the grids are nested, so each discretization
/// stochastically dominates the previous one and brev cannot decrease.
std::vector<CapSweepPoint> er_cap_sweep(double r1, double r2, const std::vector<double>& caps, double points_per_decade);

}  // namespace bundlerev
