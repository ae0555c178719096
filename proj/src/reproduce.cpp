#include "bundlerev/reproduce.hpp"

#include "bundlerev/buyer.hpp"
#include "bundlerev/constructions.hpp"
#include "bundlerev/examples.hpp"
#include "bundlerev/properties.hpp"
#include "bundlerev/randomized.hpp"
#include "bundlerev/search.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

namespace bundlerev {

bool TargetReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json TargetReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : checks)
    rows.push_back({{"check", c.name}, {"source", c.source}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"target", target}, {"pass", pass()}, {"checks", rows}};
}

std::string TargetReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks)
    out << (c.pass ? "PASS" : "FAIL") << "  " << target << "  " << c.name << "  [" << c.source << "] expected "
        << c.expected << ", got " << c.actual << '\n';
  return out.str();
}

namespace {

std::string num(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

Check exact(std::string name, std::string source, const Rational& expected, const Rational& actual) {
  return {std::move(name), std::move(source), to_display(expected), to_display(actual), expected == actual};
}

Check at_least(std::string name, std::string source, const Rational& bound, const Rational& actual) {
  return {std::move(name), std::move(source), ">= " + to_display(bound), to_display(actual), actual >= bound};
}

Check at_most(std::string name, std::string source, const Rational& bound, const Rational& actual) {
  return {std::move(name), std::move(source), "<= " + to_display(bound), to_display(actual), actual <= bound};
}

Check property(std::string name, const properties::Report& r, std::size_t wanted) {
  std::string actual = std::to_string(r.cases) + " cases, " + std::to_string(r.violations) + " violations";
  if (r.violations) actual += "; " + r.first_violation;
  return {std::move(name), "computed", std::to_string(wanted) + " cases, 0 violations", actual,
          r.violations == 0 && r.cases == wanted};
}

void example4(TargetReport& rep, const ReproduceOptions&) {
  const auto d = examples::three_item_iid();
  const auto g = candidate_grid(d, GridMode::integer);
  for (const auto& row : examples::three_item_optima()) {
    const auto result = search_optimal(d, row.constraint, g);
    rep.checks.push_back(exact(to_string(row.constraint) + " optimum", "published", row.revenue, result.revenue));
    rep.checks.push_back(exact(to_string(row.constraint) + " listed menu " + row.menu.to_string(), "published",
                               row.revenue, expected_revenue(row.menu, d)));
  }
}

void example5(TargetReport& rep, const ReproduceOptions&) {
  const Rational eps(1, 100);
  const auto d = examples::supermodular_gap(eps);
  const Menu m = Menu::two(4, 4, 1 / eps);
  const auto split = three_halves_decomposition(m);
  const Rational rev_m = expected_revenue(m, d), rev_add = expected_revenue(split.additive, d),
                 rev_bundle = expected_revenue(split.bundle_only, d);
  rep.checks.push_back(exact("rev" + m.to_string(), "computed", ratio(592, 100), rev_m));
  rep.checks.push_back(exact("rev" + split.additive.to_string(), "computed", ratio(408, 100), rev_add));
  rep.checks.push_back(exact("rev" + split.bundle_only.to_string(), "computed", ratio(384, 100), rev_bundle));
  rep.checks.push_back(exact("additive + bundle/2 - menu", "computed", ratio(8, 100), rev_add + rev_bundle / 2 - rev_m));

  const auto g = candidate_grid(d, GridMode::support_sums);
  const auto drev = search_optimal(d, SearchConstraint::unrestricted, g);
  const auto smdrev = search_optimal(d, SearchConstraint::submodular, g);
  rep.checks.push_back(at_least("searched drev", "published", ratio(592, 100), drev.revenue));
  rep.checks.push_back(at_most("searched smdrev", "published", ratio(404, 100), smdrev.revenue));
  rep.checks.push_back(exact("searched smdrev equals rev" + split.additive.to_string(), "computed", rev_add, smdrev.revenue));
  const Rational gap = drev.revenue / smdrev.revenue;
  rep.checks.push_back({"drev / smdrev", "published", "> 1.42", to_display(gap), gap > ratio(142, 100)});
}

void example6(TargetReport& rep, const ReproduceOptions&) {
  const Rational eps(1, 10);
  const auto d = examples::asymmetry_gap(eps);
  const Menu m = examples::asymmetry_gap_menu(eps);
  rep.checks.push_back(exact("rev" + m.to_string(), "computed", ratio(61, 25), expected_revenue(m, d)));
  const auto g = candidate_grid(d, GridMode::support_sums);
  const auto sym = search_optimal(d, SearchConstraint::symmetric, g);
  rep.checks.push_back(at_most("searched symmetric optimum", "published", ratio(21, 10), sym.revenue));
}

void example7(TargetReport& rep, const ReproduceOptions&) {
  const auto menu = examples::lottery_menu();
  const auto types = examples::lottery_types();
  const Valuation v = examples::lottery_buyer();
  const auto choice = rchoice(menu, v);
  rep.checks.push_back(exact("truthful utility at " + v.to_string(), "published", ratio(1152, 1187), choice.utility));
  rep.checks.push_back({"chosen entry", "published", "6", std::to_string(choice.index), choice.index == 6});

  const Rational two_names = false_name_utility(menu, v, {examples::kDeviationFirst, examples::kDeviationSecond},
                                                CombinationRule::independent_lotteries);
  rep.checks.push_back({"two-entry deviation beats truthful", "published", "> " + to_display(choice.utility),
                        to_display(two_names), two_names > choice.utility});
  const double approx = to_double(two_names);
  rep.checks.push_back({"two-entry deviation utility", "published", "1.46 +- 0.01", num(approx, 6),
                        std::abs(approx - 1.46) <= 0.01});
  const auto best = best_false_name_deviation(menu, v, CombinationRule::independent_lotteries, 2);
  rep.checks.push_back({"best 2-pick deviation improves", "published", "gain > 0", to_display(best.gain()), best.improves()});

  const auto as_mechanism = mechanism_from_menu(menu, types);
  const auto ic = verify_ic_ir(as_mechanism, types);
  rep.checks.push_back({"menu is IC and IR on 36 types", "computed", "0 violations",
                        std::to_string(ic.violation_count) + " violations", ic.ok});

  const Rational menu_revenue = expected_payment(as_mechanism, types);
  const auto lp_exact = lp_optimal(types, LpMethod::exact);
  rep.checks.push_back(exact("exact LP optimum equals menu revenue", "computed", menu_revenue, lp_exact.revenue));
  const auto lp_float = lp_optimal(types, LpMethod::floating);
  rep.checks.push_back({"floating LP optimum within 1e-9", "computed", num(to_double(menu_revenue), 15),
                        num(lp_float.float_revenue, 15),
                        std::abs(lp_float.float_revenue - to_double(menu_revenue)) <= 1e-9});
}

void theorem31(TargetReport& rep, const ReproduceOptions& o) {
  const auto r = properties::submodularization(o.seed, o.property_cases);
  rep.checks.push_back(property("submodularize2 never loses revenue", r, o.property_cases));
}

void theorem41(TargetReport& rep, const ReproduceOptions& o) {
  const auto r = properties::symmetrization(o.seed, o.property_cases);
  rep.checks.push_back(property("symmetrize2 never loses revenue", r, o.property_cases));
  rep.checks.push_back({"averaging identity exercised (c <= 2a)", "computed", "> 0 cases", std::to_string(r.side_checks),
                        r.side_checks > 0});
}

void lemma5(TargetReport& rep, const ReproduceOptions& o) {
  const auto r = properties::three_halves(o.seed, o.property_cases);
  rep.checks.push_back(property("rev(m) <= rev(additive) + rev(bundle)/2", r, o.property_cases));
}

void er_gap(TargetReport& rep, const ReproduceOptions& o) {
  const auto report = numeric_gap_er(1, 1, o.er);
  const auto exact_single = optimal_single_price_revenue(er_discretize(1, o.er));
  rep.checks.push_back(exact("srev (exact, discretized)", "computed", Rational(2), 2 * exact_single));
  const double target = 2 * report.w;
  rep.checks.push_back({"brev within 1% of 2w", "published", num(target, 8) + " +- 1%", num(report.brev, 8),
                        std::abs(report.brev - target) <= 0.01 * target});
  rep.checks.push_back({"|drev - brev| within tolerance", "computed", "<= " + num(o.er.tolerance) + " * brev",
                        num(report.drev, 8) + " vs " + num(report.brev, 8), report.drev_matches_brev(o.er.tolerance)});
  const auto sweep = er_cap_sweep(1, 1, {1e2, 1e3, 1e4}, 500);
  bool monotone = true;
  std::string trail;
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    trail += (k ? ", " : "") + num(sweep[k].brev, 14);
    if (k && sweep[k].brev < sweep[k - 1].brev - 1e-12) monotone = false;
    if (sweep[k].brev > target) monotone = false;
  }
  rep.checks.push_back({"brev nondecreasing in cap, below 2w", "computed", "nondecreasing (1e-12 slack)", trail, monotone});
}

void w_constant(TargetReport& rep, const ReproduceOptions&) {
  const double w = solve_w();
  const double residual = std::abs((w - 1) * std::exp(w) - 1);
  rep.checks.push_back({"w in (1.2784, 1.2785)", "published", "(1.2784, 1.2785)", num(w, 15), w > 1.2784 && w < 1.2785});
  rep.checks.push_back({"residual", "computed", "< 1e-12", num(residual, 3), residual < 1e-12});
}

using Runner = std::function<void(TargetReport&, const ReproduceOptions&)>;

const std::map<std::string, Runner, std::less<>>& runners() {
  static const std::map<std::string, Runner, std::less<>> table{
      {"example-4", example4},
      {"example-5", example5},
      {"example-6", example6},
      {"example-7", example7},
      {"theorem-3-1-property", theorem31},
      {"theorem-4-1-property", theorem41},
      {"lemma-5-property", lemma5},
      {"er-gap", er_gap},
      {"w-constant", w_constant},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& reproduction_targets() {
  static const std::vector<std::string> names{"example-4",           "example-5",           "example-6",
                                              "example-7",           "theorem-3-1-property", "theorem-4-1-property",
                                              "lemma-5-property",    "er-gap",              "w-constant"};
  return names;
}

TargetReport reproduce(std::string_view target, const ReproduceOptions& opts) {
  const auto it = runners().find(target);
  if (it == runners().end()) {
    std::string known;
    for (const auto& name : reproduction_targets()) known += (known.empty() ? "" : ", ") + name;
    throw ModelError("unknown reproduction target '" + std::string(target) + "' (known: " + known + ")");
  }
  const auto start = std::chrono::steady_clock::now();
  TargetReport rep;
  rep.target = std::string(target);
  it->second(rep, opts);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace bundlerev
