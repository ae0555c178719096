#include "bundlerev/buyer.hpp"

#include <algorithm>
#include <set>

namespace bundlerev {

BuyerOutcome buyer_choice(const Menu& m, const Valuation& v) {
  if (v.items() != m.items())
    throw ModelError("valuation has " + std::to_string(v.items()) + " items, menu has " + std::to_string(m.items()));
  BuyerOutcome best{Bundle(), Rational(0), Rational(0)};
  // Canonical order visits equal-size bundles lexicographically, so an
  // equal-size bundle never displaces an earlier tie.
  for (Bundle s : canonical_bundles(m.items())) {
    const Rational& p = m.price(s);
    Rational u = v.of(s) - p;
    int c = cmp(u, best.utility);
    if (c > 0 || (c == 0 && (p > best.payment || (p == best.payment && s.size() > best.bundle.size())))) {
      best.bundle = s;
      best.payment = p;
      best.utility = std::move(u);
    }
  }
  return best;
}

Rational revenue_at(const Menu& m, const Valuation& v) { return buyer_choice(m, v).payment; }

Rational expected_revenue(const Menu& m, const JointDistribution& d) {
  if (d.items() != m.items())
    throw ModelError("distribution has " + std::to_string(d.items()) + " items, menu has " + std::to_string(m.items()));
  Rational total = 0;
  for (const auto& atom : d.atoms()) total += atom.prob * revenue_at(m, atom.values);
  return total;
}

std::map<std::uint32_t, Rational> sale_probabilities(const Menu& m, const JointDistribution& d) {
  std::map<std::uint32_t, Rational> out;
  out[0] = 0;
  for (Bundle s : canonical_bundles(m.items())) out[s.mask()] = 0;
  for (const auto& atom : d.atoms()) out[buyer_choice(m, atom.values).bundle.mask()] += atom.prob;
  return out;
}

bool HalfPlane::contains(const Rational& v1, const Rational& v2) const {
  Rational lhs = coef1 * v1 + coef2 * v2;
  return strict ? lhs > rhs : lhs >= rhs;
}

std::string to_string(MenuShape s) {
  switch (s) {
    case MenuShape::submodular: return "submodular";
    case MenuShape::supermodular: return "supermodular";
    case MenuShape::additive: return "additive";
  }
  return "?";
}

bool Region::contains(const Valuation& v) const {
  for (const auto& h : constraints)
    if (!h.contains(v[0], v[1])) return false;
  return true;
}

const Region& RegionPartition2::region_of(const Valuation& v) const {
  for (const auto& r : regions)
    if (r.contains(v)) return r;
  throw ModelError("valuation " + v.to_string() + " lies in no region");
}

RegionPartition2 region_partition_2(const Menu& m) {
  if (m.items() != 2) throw ModelError("region partition needs a two-item menu");
  const Rational a = m.a(), b = m.b(), c = m.c();
  if (c < a || c < b) throw ModelError("region partition needs a normalized menu (c >= max(a, b)); got " + m.to_string());

  RegionPartition2 out{m, MenuShape::additive, {}, {}};
  if (c > a + b)
    out.shape = MenuShape::supermodular;
  else if (c < a + b)
    out.shape = MenuShape::submodular;

  auto ge = [](Rational c1, Rational c2, Rational rhs) { return HalfPlane{c1, c2, rhs, false}; };
  auto gt = [](Rational c1, Rational c2, Rational rhs) { return HalfPlane{c1, c2, rhs, true}; };
  auto lt = [](Rational c1, Rational c2, Rational rhs) { return HalfPlane{-c1, -c2, -rhs, true}; };

  // Pairwise comparisons under the tie-break order; the buyer's pick is the
  // option that wins all of them. The bundle wins every utility tie because
  // c >= max(a, b) and it is the largest bundle.
  Region none{Bundle(), {lt(1, 0, a), lt(0, 1, b), lt(1, 1, c)}};
  Region item1{Bundle(1),
               {ge(1, 0, a), lt(0, 1, c - a), a >= b ? ge(1, -1, a - b) : gt(1, -1, a - b)}};
  Region item2{Bundle(2),
               {ge(0, 1, b), lt(1, 0, c - b), b > a ? ge(-1, 1, b - a) : gt(-1, 1, b - a)}};
  Region both{Bundle(3), {ge(0, 1, c - a), ge(1, 0, c - b), ge(1, 1, c)}};
  out.regions = {none, item1, item2, both};

  out.vertices.push_back({"a", a, 0});
  out.vertices.push_back({"b", 0, b});
  switch (out.shape) {
    case MenuShape::submodular:
      out.vertices.push_back({"(a, c-a)", a, c - a});
      out.vertices.push_back({"(c-b, b)", c - b, b});
      break;
    case MenuShape::supermodular:
      out.vertices.push_back({"(a, b)", a, b});
      out.vertices.push_back({"(c-b, c-a)", c - b, c - a});
      break;
    case MenuShape::additive:
      out.vertices.push_back({"(a, b)", a, b});
      break;
  }
  return out;
}

MonotonicityReport check_monotone(const Menu& m, const std::vector<Valuation>& grid) {
  const std::size_t g = grid.size();
  const int n = m.items();
  MonotonicityReport report;
  if (g == 0) return report;

  // Rank coordinates and revenues so the quadratic pair scan compares integers.
  std::vector<std::vector<int>> coord_rank(g, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> axis;
    for (const auto& v : grid) axis.push_back(v[i]);
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    for (std::size_t k = 0; k < g; ++k)
      coord_rank[k][i] = static_cast<int>(std::lower_bound(axis.begin(), axis.end(), grid[k][i]) - axis.begin());
  }
  std::vector<Rational> revenue(g);
  for (std::size_t k = 0; k < g; ++k) revenue[k] = revenue_at(m, grid[k]);
  std::vector<Rational> levels = revenue;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<int> revenue_rank(g);
  for (std::size_t k = 0; k < g; ++k)
    revenue_rank[k] = static_cast<int>(std::lower_bound(levels.begin(), levels.end(), revenue[k]) - levels.begin());

  std::vector<std::vector<std::size_t>> worse_above(g);
  std::size_t pairs = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : pairs)
  for (std::size_t lo = 0; lo < g; ++lo) {
    for (std::size_t hi = 0; hi < g; ++hi) {
      if (hi == lo) continue;
      bool dominated = true;
      for (int i = 0; i < n && dominated; ++i) dominated = coord_rank[lo][i] <= coord_rank[hi][i];
      if (!dominated) continue;
      ++pairs;
      if (revenue_rank[hi] < revenue_rank[lo]) worse_above[lo].push_back(hi);
    }
  }
  report.pairs_checked = pairs;
  for (std::size_t lo = 0; lo < g; ++lo)
    for (std::size_t hi : worse_above[lo])
      report.violations.push_back({grid[lo], grid[hi], revenue[lo], revenue[hi]});
  return report;
}

std::vector<Valuation> monotonicity_grid(const Menu& m, const JointDistribution& d, const Rational& offset) {
  const int n = m.items();
  std::vector<std::set<Rational>> axes(n);
  std::vector<Rational> corners{0};
  for (Bundle s : canonical_bundles(n)) corners.push_back(m.price(s));
  if (n == 2) {
    corners.push_back(m.c() - m.a());
    corners.push_back(m.c() - m.b());
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> base = corners;
    for (const auto& atom : d.atoms()) base.push_back(atom.values[i]);
    for (const auto& x : base)
      for (const Rational& y : {Rational(x - offset), x, Rational(x + offset)})
        if (y >= 0) axes[i].insert(y);
  }
  std::vector<Valuation> grid{Valuation()};
  for (int i = 0; i < n; ++i) {
    std::vector<Valuation> next;
    for (const auto& prefix : grid)
      for (const auto& x : axes[i]) {
        std::vector<Rational> v = prefix.values();
        v.push_back(x);
        next.emplace_back(std::move(v));
      }
    grid = std::move(next);
  }
  return grid;
}

}  // namespace bundlerev
