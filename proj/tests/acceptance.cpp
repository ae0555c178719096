// Acceptance suite: one PASS/FAIL line per criterion, followed by its
// sub-checks. `acceptance N` runs criterion N only (ctest registers one test
// per criterion); no argument runs all of them. Exit status is nonzero when
// any selected criterion fails.

#include <bundlerev/buyer.hpp>
#include <bundlerev/constructions.hpp>
#include <bundlerev/continuous.hpp>
#include <bundlerev/examples.hpp>
#include <bundlerev/properties.hpp>
#include <bundlerev/randomized.hpp>
#include <bundlerev/search.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace bundlerev;

// Pinned tolerances and budgets.
constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kConstructionCases = 1000;
constexpr std::size_t kMonotoneCases = 500;
constexpr std::size_t kOracleCases = 100;
constexpr double kExample4Seconds = 600;       // criterion 1 runtime budget
constexpr double kErSeconds = 60;              // criterion 9 runtime budget
constexpr double kWLow = 1.2784, kWHigh = 1.2785;
constexpr double kWResidual = 1e-12;
constexpr int kErGridPoints = 2001;            // at least 2000
constexpr double kErCap = 1e4;
constexpr double kBrevRelative = 0.01;         // |brev - 2w| <= 1% of 2w
constexpr double kDrevRelative = 0.01;         // |drev - brev| <= 1% of brev
constexpr double kSweepSlack = 1e-12;          // floating noise allowed in the cap sweep
constexpr double kFloatLp = 1e-9;
constexpr double kDeviationTarget = 1.46, kDeviationSlack = 0.01;
constexpr double kGapRatio = 1.42;

struct Sub {
  std::string what;
  bool pass;
};

using Criterion = std::function<std::vector<Sub>()>;

std::string show(const Rational& q) { return to_display(q); }

std::string num(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Sub property_sub(const std::string& name, const properties::Report& r, std::size_t wanted) {
  std::string text = name + ": " + std::to_string(r.cases) + " cases, " + std::to_string(r.violations) +
                     " violations, min margin " + show(r.min_margin);
  if (r.violations) text += "; first: " + r.first_violation;
  return {text, r.cases == wanted && r.violations == 0 && sgn(r.min_margin) >= 0};
}

std::vector<Sub> criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const auto d = examples::three_item_iid();
  const auto g = candidate_grid(d, GridMode::integer);
  std::vector<Sub> out;
  for (const auto& row : examples::three_item_optima()) {
    const auto r = search_optimal(d, row.constraint, g);
    out.push_back({to_string(row.constraint) + " = " + show(r.revenue) + " at " + r.best.to_string() + " (expected " +
                       show(row.revenue) + ")",
                   r.revenue == row.revenue});
    if (row.constraint == SearchConstraint::unrestricted) {
      const Rational listed = expected_revenue(row.menu, d);
      out.push_back({"optimum matches " + row.menu.to_string() + " = " + show(listed), listed == r.revenue});
    }
  }
  const double secs = seconds_since(start);
  out.push_back({"runtime " + num(secs, 4) + " s (budget " + num(kExample4Seconds) + " s)", secs < kExample4Seconds});
  return out;
}

std::vector<Sub> criterion2() {
  return {property_sub("submodularize2 margin >= 0", properties::submodularization(kSeed, kConstructionCases), kConstructionCases)};
}

std::vector<Sub> criterion3() {
  const auto r = properties::symmetrization(kSeed, kConstructionCases);
  return {property_sub("symmetrize2 margin >= 0", r, kConstructionCases),
          {"averaging identity verified on " + std::to_string(r.side_checks) + " cases with c <= 2a", r.side_checks > 0}};
}

std::vector<Sub> criterion4() {
  std::vector<Sub> out;
  const auto r = properties::monotonicity(kSeed, kMonotoneCases);
  out.push_back({"submodular menus: " + std::to_string(r.cases) + " cases, " + std::to_string(r.violations) + " violations over " +
                     std::to_string(r.side_checks) + " dominated pairs" + (r.violations ? "; first: " + r.first_violation : ""),
                 r.cases == kMonotoneCases && r.violations == 0});

  const Menu m = Menu::two(5, 1, 10);
  const Valuation low{5, 0}, high{5, ratio(9, 2)};
  const auto d = product({SingleItemDistribution::uniform({0, 5}), SingleItemDistribution::uniform({0, 5})});
  auto grid = monotonicity_grid(m, d, ratio(1, 2));
  grid.push_back(low);
  grid.push_back(high);
  const auto report = check_monotone(m, grid);
  bool found = false;
  for (const auto& v : report.violations) found = found || (v.low == low && v.high == high);
  out.push_back({"(5, 1, 10): violation (5, 0) -> (5, 9/2) reported, revenue " + show(revenue_at(m, low)) + " -> " +
                     show(revenue_at(m, high)),
                 found});
  return out;
}

std::vector<Sub> criterion5() {
  std::vector<Sub> out;
  out.push_back(property_sub("rev(m) <= rev(additive) + rev(bundle)/2", properties::three_halves(kSeed, kConstructionCases),
                             kConstructionCases));
  const auto d = examples::supermodular_gap(ratio(1, 100));
  const Menu m = Menu::two(4, 4, 100);
  const auto split = three_halves_decomposition(m);
  const Rational rm = expected_revenue(m, d), ra = expected_revenue(split.additive, d), rb = expected_revenue(split.bundle_only, d);
  out.push_back({"rev" + m.to_string() + " = " + show(rm) + " (expected 592/100)", rm == ratio(592, 100)});
  out.push_back({"rev" + split.additive.to_string() + " = " + show(ra) + " (expected 408/100)", ra == ratio(408, 100)});
  out.push_back({"rev" + split.bundle_only.to_string() + " = " + show(rb) + " (expected 384/100)", rb == ratio(384, 100)});
  const Rational margin = ra + rb / 2 - rm;
  out.push_back({"margin " + show(margin) + " (expected 8/100)", margin == ratio(8, 100)});
  return out;
}

std::vector<Sub> criterion6() {
  const auto d = examples::supermodular_gap(ratio(1, 100));
  const auto g = candidate_grid(d, GridMode::support_sums);
  const auto drev = search_optimal(d, SearchConstraint::unrestricted, g);
  const auto smdrev = search_optimal(d, SearchConstraint::submodular, g);
  const Rational gap = drev.revenue / smdrev.revenue;
  return {{"drev = " + show(drev.revenue) + " at " + drev.best.to_string() + " (>= 592/100)", drev.revenue >= ratio(592, 100)},
          {"smdrev = " + show(smdrev.revenue) + " at " + smdrev.best.to_string() + " (<= 404/100)", smdrev.revenue <= ratio(404, 100)},
          {"drev/smdrev = " + show(gap) + " (> " + num(kGapRatio) + ")", to_double(gap) > kGapRatio}};
}

std::vector<Sub> criterion7() {
  const Rational eps = ratio(1, 10);
  const auto d = examples::asymmetry_gap(eps);
  const Menu m = examples::asymmetry_gap_menu(eps);
  const Rational rm = expected_revenue(m, d);
  const auto sym = search_optimal(d, SearchConstraint::symmetric, candidate_grid(d, GridMode::support_sums));
  return {{"rev" + m.to_string() + " = " + show(rm) + " (expected 61/25)", rm == ratio(61, 25)},
          {"symmetric optimum " + show(sym.revenue) + " at " + sym.best.to_string() + " (<= 21/10)", sym.revenue <= ratio(21, 10)}};
}

std::vector<Sub> criterion8() {
  const double w = solve_w();
  const double residual = std::abs((w - 1) * std::exp(w) - 1);
  return {{"w = " + num(w, 15) + " in (" + num(kWLow) + ", " + num(kWHigh) + ")", w > kWLow && w < kWHigh},
          {"residual " + num(residual, 3) + " < " + num(kWResidual), residual < kWResidual}};
}

std::vector<Sub> criterion9() {
  const auto start = std::chrono::steady_clock::now();
  NumericParams p;
  p.cap = kErCap;
  p.grid_points = kErGridPoints;
  p.tolerance = kDrevRelative;
  const auto r = numeric_gap_er(1, 1, p);
  const Rational exact_srev = 2 * optimal_single_price_revenue(er_discretize(1, p));
  const double target = 2 * solve_w();
  std::vector<Sub> out{
      {"srev = " + show(exact_srev) + " exactly (float report " + num(r.srev) + ")", exact_srev == 2 && r.srev == 2.0},
      {"brev = " + num(r.brev) + " vs 2w = " + num(target) + " (within " + num(kBrevRelative * 100) + "%)",
       std::abs(r.brev - target) <= kBrevRelative * target},
      {"drev = " + num(r.drev) + " vs brev (within " + num(kDrevRelative * 100) + "%)", r.drev_matches_brev(kDrevRelative)}};
  const auto sweep = er_cap_sweep(1, 1, {1e2, 1e3, 1e4}, 500);
  bool monotone = true;
  std::string trail;
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    trail += (k ? ", " : "") + num(sweep[k].brev, 15);
    if (k && sweep[k].brev < sweep[k - 1].brev - kSweepSlack) monotone = false;
    if (sweep[k].brev > target) monotone = false;
  }
  out.push_back({"caps 1e2, 1e3, 1e4: brev " + trail + " nondecreasing and below 2w", monotone});
  const double secs = seconds_since(start);
  out.push_back({"runtime " + num(secs, 4) + " s (budget " + num(kErSeconds) + " s)", secs < kErSeconds});
  return out;
}

std::vector<Sub> criterion10() {
  const auto menu = examples::lottery_menu();
  const auto types = examples::lottery_types();
  const Valuation v = examples::lottery_buyer();
  const auto choice = rchoice(menu, v);
  const Rational two = false_name_utility(menu, v, {examples::kDeviationFirst, examples::kDeviationSecond},
                                          CombinationRule::independent_lotteries);
  const Rational menu_revenue = expected_revenue(menu, types);
  const auto exact_lp = lp_optimal(types, LpMethod::exact);
  const auto float_lp = lp_optimal(types, LpMethod::floating);
  return {
      {"rchoice utility " + show(choice.utility) + " (expected 1152/1187)", choice.utility == ratio(1152, 1187)},
      {"two-entry utility " + show(two) + " > 1152/1187", two > choice.utility},
      {"two-entry utility " + num(to_double(two), 6) + " within " + num(kDeviationSlack) + " of " + num(kDeviationTarget),
       std::abs(to_double(two) - kDeviationTarget) <= kDeviationSlack},
      {"exact LP " + show(exact_lp.revenue) + " equals menu revenue " + show(menu_revenue) + " (" +
           std::to_string(exact_lp.rows) + " rows, " + num(exact_lp.seconds, 3) + " s)",
       exact_lp.revenue == menu_revenue},
      {"floating LP " + num(float_lp.float_revenue, 15) + " within " + num(kFloatLp) + " of menu revenue" +
           (float_lp.certified ? " (basis certified exact)" : ""),
       std::abs(float_lp.float_revenue - to_double(menu_revenue)) <= kFloatLp},
  };
}

std::vector<Sub> criterion11() {
  const auto r = properties::oracle_equivalence(kSeed, kOracleCases);
  return {{"search_optimal == search_naive on " + std::to_string(r.cases) + " feasible instances (" +
               std::to_string(r.side_checks) + " infeasible draws agreed), " + std::to_string(r.violations) + " mismatches" +
               (r.violations ? "; first: " + r.first_violation : ""),
           r.cases == kOracleCases && r.violations == 0}};
}

struct Entry {
  int id;
  const char* title;
  Criterion run;
};

const std::vector<Entry>& criteria() {
  static const std::vector<Entry> all{
      {1, "three-item optima on the integer grid", criterion1},
      {2, "submodularization property suite", criterion2},
      {3, "symmetrization property suite", criterion3},
      {4, "revenue monotonicity of submodular menus", criterion4},
      {5, "three-halves decomposition bound", criterion5},
      {6, "supermodular gap on a correlated pair", criterion6},
      {7, "asymmetric menu beats symmetric search", criterion7},
      {8, "w constant", criterion8},
      {9, "equal revenue gap, numeric", criterion9},
      {10, "lottery menu: choice, false-name deviation, LP", criterion10},
      {11, "search against the naive oracle", criterion11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    std::vector<Sub> subs;
    std::string error;
    try {
      subs = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool pass = error.empty() && !subs.empty();
    for (const auto& s : subs) pass = pass && s.pass;
    all_pass = all_pass && pass;
    std::printf("%s  criterion %2d  %s  (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds_since(start));
    for (const auto& s : subs) std::printf("        %s  %s\n", s.pass ? "ok  " : "FAIL", s.what.c_str());
    if (!error.empty()) std::printf("        FAIL  exception: %s\n", error.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
