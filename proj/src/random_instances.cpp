#include "bundlerev/random_instances.hpp"

#include <algorithm>
#include <set>

namespace bundlerev::random {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Rational> normalized_weights(Rng& rng, std::size_t count) {
  std::vector<Rational> w;
  Rational total = 0;
  for (std::size_t k = 0; k < count; ++k) {
    w.emplace_back(uniform(rng, 1, 10));
    total += w.back();
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace

SingleItemDistribution marginal(Rng& rng, int max_atoms, int max_value) {
  const int k = uniform(rng, 1, std::min(max_atoms, max_value + 1));
  std::set<int> values;
  while (static_cast<int>(values.size()) < k) values.insert(uniform(rng, 0, max_value));
  const auto w = normalized_weights(rng, values.size());
  std::vector<ValueAtom> atoms;
  std::size_t i = 0;
  for (int v : values) atoms.push_back({Rational(v), w[i++]});
  return SingleItemDistribution(std::move(atoms));
}

JointDistribution joint(Rng& rng, int n, int max_atoms, int max_value) {
  const int k = uniform(rng, 1, max_atoms);
  std::set<std::vector<int>> points;
  while (static_cast<int>(points.size()) < k) {
    std::vector<int> p(n);
    for (auto& x : p) x = uniform(rng, 0, max_value);
    points.insert(p);
  }
  const auto w = normalized_weights(rng, points.size());
  std::vector<JointAtom> atoms;
  std::size_t i = 0;
  for (const auto& p : points) {
    std::vector<Rational> v(p.begin(), p.end());
    atoms.push_back({Valuation(std::move(v)), w[i++]});
  }
  return JointDistribution(n, std::move(atoms));
}

Menu strictly_supermodular_menu(Rng& rng, int max_value) {
  const int a = uniform(rng, 0, max_value), b = uniform(rng, 0, max_value);
  return Menu::two(a, b, a + b + uniform(rng, 1, max_value));
}

Menu asymmetric_submodular_menu(Rng& rng, int max_value) {
  int a, b;
  do {
    a = uniform(rng, 0, max_value);
    b = uniform(rng, 0, max_value);
  } while (a == b);
  return Menu::two(a, b, uniform(rng, std::max(a, b), a + b));
}

Menu submodular_menu(Rng& rng, int max_value) {
  const int a = uniform(rng, 0, max_value), b = uniform(rng, 0, max_value);
  return Menu::two(a, b, uniform(rng, std::max(a, b), a + b));
}

CandidateGrid small_grid(Rng& rng, int n, std::uint64_t max_combinations, int max_value, bool symmetric_sets) {
  const auto& order = canonical_bundles(n);
  // Groups of consecutive bundles sharing one candidate set.
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end)
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (symmetric_sets && k > 0 && order[k - 1].size() == order[k].size())
      groups.back().second = k + 1;
    else
      groups.emplace_back(k, k + 1);
  }
  std::vector<std::vector<Rational>> sets(order.size());
  std::uint64_t combos = 1;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto [begin, end] = groups[gi];
    const std::size_t copies = end - begin;
    // Leave room for at least two candidates per later group where possible.
    std::uint64_t cap = std::max<std::uint64_t>(1, max_combinations / combos);
    for (std::size_t r = gi + 1; r < groups.size() && cap > 1; ++r) cap = std::max<std::uint64_t>(1, cap / 2);
    auto power = [copies](std::uint64_t s) {
      std::uint64_t p = 1;
      for (std::size_t c = 0; c < copies; ++c) p *= s;
      return p;
    };
    int largest = 1;
    while (largest < 5 && power(largest + 1) <= cap) ++largest;
    const int size = uniform(rng, 1, largest);
    std::set<Rational> prices;
    while (static_cast<int>(prices.size()) < size) {
      Rational p(uniform(rng, 0, 2 * max_value));
      prices.insert(p / 2);
    }
    for (std::size_t k = begin; k < end; ++k) sets[k].assign(prices.begin(), prices.end());
    combos *= power(size);
  }
  return explicit_grid(n, std::move(sets));
}

}  // namespace bundlerev::random
