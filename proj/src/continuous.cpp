#include "bundlerev/continuous.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bundlerev {

double solve_w() {
  auto f = [](double w) { return (w - 1.0) * std::exp(w) - 1.0; };
  double lo = 1.0, hi = 2.0;  // f(1) = -1 < 0 < e^2 - 1 = f(2); f is increasing on [1, 2]
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  double w = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double step = f(w) / (w * std::exp(w));
    if (step == 0.0) break;
    w -= step;
  }
  return w;
}

double er_tail(double r, double p) {
  if (!(r > 0) || !(p > 0)) throw std::invalid_argument("er_tail needs r > 0 and p > 0");
  return std::min(1.0, r / p);
}

void NumericParams::validate(double r) const {
  if (!(r > 0)) throw std::invalid_argument("revenue level r must be positive");
  if (!(cap > r)) throw std::invalid_argument("truncation cap must exceed r");
  if (grid_points < 100) throw std::invalid_argument("at least 100 grid points are required");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (single_candidates < 2 || bundle_candidates < 2) throw std::invalid_argument("drev search needs at least 2 candidates per bundle");
}

SingleItemDistribution er_discretize(double r, const NumericParams& params) {
  params.validate(r);
  const int K = params.grid_points;
  const double decades = std::log10(params.cap / r);
  std::vector<double> x(K);
  for (int k = 0; k < K; ++k) x[k] = r * std::pow(10.0, k * decades / (K - 1));
  x.front() = r;
  x.back() = params.cap;

  const Rational rq = from_double(r);
  std::vector<Rational> tail(K);
  for (int k = 0; k < K; ++k) tail[k] = rq / from_double(x[k]);
  std::vector<ValueAtom> atoms;
  atoms.reserve(K);
  for (int k = 0; k + 1 < K; ++k) atoms.push_back({from_double(x[k]), tail[k] - tail[k + 1]});
  atoms.push_back({from_double(x.back()), tail.back()});
  return SingleItemDistribution(std::move(atoms));
}

DiscreteF DiscreteF::from(const SingleItemDistribution& d) {
  DiscreteF out;
  for (const auto& a : d.atoms()) {
    out.values.push_back(to_double(a.value));
    out.probs.push_back(to_double(a.prob));
  }
  return out;
}

double DiscreteF::prob_at_least(double p) const {
  auto it = std::lower_bound(values.begin(), values.end(), p);
  return std::accumulate(probs.begin() + (it - values.begin()), probs.end(), 0.0);
}

double optimal_single_price_revenue(const DiscreteF& f) {
  double best = 0, tail = 0;
  for (std::size_t k = f.values.size(); k-- > 0;) {
    tail += f.probs[k];
    best = std::max(best, f.values[k] * tail);
  }
  return best;
}

Rational optimal_single_price_revenue(const SingleItemDistribution& f) {
  Rational best = 0, tail = 0;
  const auto& atoms = f.atoms();
  for (std::size_t k = atoms.size(); k-- > 0;) {
    tail += atoms[k].prob;
    Rational r = atoms[k].value * tail;
    if (r > best) best = r;
  }
  return best;
}

namespace {

struct SumAtom {
  double sum;
  double prob;
};

// All pairwise sums, descending, with the suffix mass Pr[v1 + v2 >= sum] in
// `prob` at the last atom of each run of equal sums.
std::vector<SumAtom> sorted_sums(const DiscreteF& first, const DiscreteF& second) {
  std::vector<SumAtom> sums;
  sums.reserve(first.values.size() * second.values.size());
  for (std::size_t i = 0; i < first.values.size(); ++i)
    for (std::size_t j = 0; j < second.values.size(); ++j)
      sums.push_back({first.values[i] + second.values[j], first.probs[i] * second.probs[j]});
  std::sort(sums.begin(), sums.end(), [](const SumAtom& x, const SumAtom& y) {
    return x.sum > y.sum || (x.sum == y.sum && x.prob > y.prob);
  });
  double tail = 0;
  for (auto& s : sums) {
    tail += s.prob;
    s.prob = tail;
  }
  return sums;
}

// Index k is a valid price point when it closes a run of equal sums.
double best_bundle_revenue(const std::vector<SumAtom>& sums, std::size_t lo, std::size_t hi) {
  double best = 0;
  for (std::size_t k = lo; k < hi; ++k)
    if (k + 1 == sums.size() || sums[k + 1].sum != sums[k].sum) best = std::max(best, sums[k].sum * sums[k].prob);
  return best;
}

}  // namespace

double bundle_price_sweep_serial(const DiscreteF& first, const DiscreteF& second) {
  const auto sums = sorted_sums(first, second);
  return best_bundle_revenue(sums, 0, sums.size());
}

double bundle_price_sweep(const DiscreteF& first, const DiscreteF& second) {
  const auto sums = sorted_sums(first, second);
  const std::size_t chunks = 64;
  const std::size_t width = (sums.size() + chunks - 1) / chunks;
  std::vector<double> local(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c)
    local[c] = best_bundle_revenue(sums, std::min(sums.size(), c * width), std::min(sums.size(), (c + 1) * width));
  return *std::max_element(local.begin(), local.end());
}

double pair_menu_revenue(const DiscreteF& first, const DiscreteF& second, double a, double b, double c) {
  // Suffix masses of the second item: tail[j] = Pr[v2 >= values[j]].
  const auto& x2 = second.values;
  std::vector<double> tail(x2.size() + 1, 0.0);
  for (std::size_t j = x2.size(); j-- > 0;) tail[j] = tail[j + 1] + second.probs[j];

  double total = 0;
  for (std::size_t i = 0; i < first.values.size(); ++i) {
    const double v1 = first.values[i];
    // Flat in v2: nothing, or item 1 (wins every tie with nothing).
    const bool item1 = v1 >= a;
    const double flat_u = item1 ? v1 - a : 0.0;
    const double flat_p = item1 ? a : 0.0;
    const int flat_size = item1 ? 1 : 0;
    // Slope one in v2: item 2, or the bundle (wins ties since c >= b).
    const bool bundle = v1 - c >= -b;
    const double rise_i = bundle ? v1 - c : -b;
    const double rise_p = bundle ? c : b;
    const int rise_size = bundle ? 2 : 1;
    const bool tie_to_rise = rise_p > flat_p || (rise_p == flat_p && rise_size > flat_size);
    const double threshold = flat_u - rise_i;
    auto it = tie_to_rise ? std::lower_bound(x2.begin(), x2.end(), threshold)
                          : std::upper_bound(x2.begin(), x2.end(), threshold);
    const double above = tail[static_cast<std::size_t>(it - x2.begin())];
    total += first.probs[i] * (flat_p * (1.0 - above) + rise_p * above);
  }
  return total;
}

namespace {

PairSearchResult best_for_bundle_price(const DiscreteF& first, const DiscreteF& second,
                                       const std::vector<double>& singles_1, const std::vector<double>& singles_2,
                                       double c) {
  auto below = [c](const std::vector<double>& singles) {
    std::vector<double> out;
    for (double s : singles)
      if (s < c) out.push_back(s);
    out.push_back(c);
    return out;
  };
  PairSearchResult best;
  bool found = false;
  for (double a : below(singles_1))
    for (double b : below(singles_2)) {
      const double r = pair_menu_revenue(first, second, a, b, c);
      ++best.menus_examined;
      if (!found || r > best.revenue) {
        found = true;
        best.revenue = r;
        best.a = a;
        best.b = b;
        best.c = c;
      }
    }
  return best;
}

PairSearchResult merge(const std::vector<PairSearchResult>& parts) {
  PairSearchResult best;
  std::size_t examined = 0;
  bool found = false;
  for (const auto& p : parts) {
    examined += p.menus_examined;
    if (!found || p.revenue > best.revenue) {
      found = true;
      best = p;
    }
  }
  best.menus_examined = examined;
  return best;
}

}  // namespace

PairSearchResult search_pair_menus_serial(const DiscreteF& first, const DiscreteF& second,
                                          const std::vector<double>& singles_1, const std::vector<double>& singles_2,
                                          const std::vector<double>& bundles) {
  std::vector<PairSearchResult> parts;
  for (double c : bundles) parts.push_back(best_for_bundle_price(first, second, singles_1, singles_2, c));
  return merge(parts);
}

PairSearchResult search_pair_menus(const DiscreteF& first, const DiscreteF& second,
                                   const std::vector<double>& singles_1, const std::vector<double>& singles_2,
                                   const std::vector<double>& bundles) {
  std::vector<PairSearchResult> parts(bundles.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < bundles.size(); ++k)
    parts[k] = best_for_bundle_price(first, second, singles_1, singles_2, bundles[k]);
  return merge(parts);
}

std::vector<double> capped_support_grid(const std::vector<double>& support, int count) {
  std::vector<double> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> out{0.0};
  auto first_positive = std::upper_bound(sorted.begin(), sorted.end(), 0.0);
  if (first_positive == sorted.end()) return out;
  const double lo = *first_positive, hi = sorted.back();
  for (int k = 0; k < count; ++k) {
    const double target = count == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1));
    auto it = std::lower_bound(first_positive, sorted.end(), target);
    if (it == sorted.end()) it = std::prev(sorted.end());
    if (it != first_positive && target - *std::prev(it) < *it - target) it = std::prev(it);
    out.push_back(*it);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ErGapReport::drev_matches_brev(double tolerance) const { return std::abs(drev - brev) <= tolerance * brev; }

ErGapReport numeric_gap_er(double r1, double r2, const NumericParams& params) {
  params.validate(r1);
  params.validate(r2);
  const DiscreteF f1 = DiscreteF::from(er_discretize(r1, params));
  const DiscreteF f2 = DiscreteF::from(er_discretize(r2, params));

  ErGapReport out;
  out.r1 = r1;
  out.r2 = r2;
  out.cap = params.cap;
  out.grid_points = params.grid_points;
  out.srev = r1 + r2;
  out.brev = bundle_price_sweep(f1, f2);
  out.w = solve_w();

  std::vector<double> sums;
  sums.reserve(f1.values.size() * f2.values.size());
  for (double x : f1.values)
    for (double y : f2.values) sums.push_back(x + y);
  const auto singles_1 = capped_support_grid(f1.values, params.single_candidates);
  const auto singles_2 = capped_support_grid(f2.values, params.single_candidates);
  const auto bundles = capped_support_grid(sums, params.bundle_candidates);
  out.drev_menu = search_pair_menus(f1, f2, singles_1, singles_2, bundles);
  out.drev = out.drev_menu.revenue;
  return out;
}

std::vector<CapSweepPoint> er_cap_sweep(double r1, double r2, const std::vector<double>& caps, double points_per_decade) {
  std::vector<CapSweepPoint> out;
  for (double cap : caps) {
    NumericParams p1, p2;
    p1.cap = p2.cap = cap;
    p1.grid_points = static_cast<int>(std::lround(points_per_decade * std::log10(cap / r1))) + 1;
    p2.grid_points = static_cast<int>(std::lround(points_per_decade * std::log10(cap / r2))) + 1;
    const DiscreteF f1 = DiscreteF::from(er_discretize(r1, p1));
    const DiscreteF f2 = DiscreteF::from(er_discretize(r2, p2));
    out.push_back({cap, p1.grid_points, p2.grid_points, r1 + r2, bundle_price_sweep(f1, f2)});
  }
  return out;
}

}  // namespace bundlerev
