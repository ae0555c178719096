#include "bundlerev/model.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bundlerev {
namespace {

void check_items(int n) {
  if (n < 1 || n > kMaxItems) throw ModelError("item count " + std::to_string(n) + " outside [1, 16]");
}

Rational total_mass(const auto& atoms) {
  Rational sum = 0;
  for (const auto& a : atoms) sum += a.prob;
  return sum;
}

void check_mass(const Rational& mass) {
  if (mass != 1) throw ModelError("mass " + to_string(mass) + " ≠ 1");
}

}  // namespace

Bundle Bundle::of(std::initializer_list<int> items) {
  std::uint32_t mask = 0;
  for (int i : items) {
    if (i < 1 || i > kMaxItems) throw ModelError("item index out of range");
    mask |= std::uint32_t{1} << (i - 1);
  }
  return Bundle(mask);
}

int Bundle::size() const { return std::popcount(mask_); }

std::vector<int> Bundle::items() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((mask_ >> i) & 1U) out.push_back(i + 1);
  return out;
}

std::string Bundle::key() const {
  std::string out;
  for (int i : items()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

Bundle Bundle::from_key(std::string_view key, int n) {
  std::uint32_t mask = 0;
  int last = 0;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string_view::npos) comma = key.size();
    std::string_view part = key.substr(pos, comma - pos);
    if (part.empty()) throw ModelError("malformed bundle key \"" + std::string(key) + "\"");
    int item = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') throw ModelError("malformed bundle key \"" + std::string(key) + "\"");
      item = item * 10 + (ch - '0');
      if (item > kMaxItems) break;
    }
    if (item < 1 || item > n) throw ModelError("bundle key \"" + std::string(key) + "\" names an item outside 1.." + std::to_string(n));
    if (item <= last) throw ModelError("bundle key \"" + std::string(key) + "\" is not sorted ascending");
    last = item;
    mask |= std::uint32_t{1} << (item - 1);
    pos = comma + 1;
  }
  return Bundle(mask);
}

bool preferred_on_tie(Bundle lhs, Bundle rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() > rhs.size();
  return lhs.items() < rhs.items();
}

const std::vector<Bundle>& canonical_bundles(int n) {
  check_items(n);
  static std::array<std::vector<Bundle>, kMaxItems + 1> cache;
  static std::once_flag flags[kMaxItems + 1];
  std::call_once(flags[n], [n] {
    std::vector<Bundle> out;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) out.emplace_back(m);
    std::sort(out.begin(), out.end(), [](Bundle x, Bundle y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x.items() < y.items();
    });
    cache[n] = std::move(out);
  });
  return cache[n];
}

Valuation::Valuation(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v < 0) throw ModelError("negative value " + bundlerev::to_string(v));
}

Rational Valuation::of(Bundle s) const {
  Rational sum = 0;
  for (int i = 0; i < items(); ++i)
    if (s.contains(i + 1)) sum += values_[i];
  return sum;
}

bool Valuation::dominated_by(const Valuation& other) const {
  for (int i = 0; i < items(); ++i)
    if (values_[i] > other.values_[i]) return false;
  return true;
}

std::strong_ordering Valuation::compare(const Valuation& other) const {
  const std::size_t k = std::min(values_.size(), other.values_.size());
  for (std::size_t i = 0; i < k; ++i) {
    int c = cmp(values_[i], other.values_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return values_.size() <=> other.values_.size();
}

std::string Valuation::to_string() const {
  std::string out = "(";
  for (int i = 0; i < items(); ++i) {
    if (i) out += ", ";
    out += bundlerev::to_string(values_[i]);
  }
  return out + ")";
}

SingleItemDistribution::SingleItemDistribution(std::vector<ValueAtom> atoms) {
  if (atoms.empty()) throw ModelError("empty support");
  std::map<Rational, Rational> merged;
  for (auto& a : atoms) {
    if (a.value < 0) throw ModelError("negative value " + to_string(a.value));
    if (a.prob <= 0) throw ModelError("nonpositive probability " + to_string(a.prob));
    merged[a.value] += a.prob;
  }
  for (auto& [v, p] : merged) atoms_.push_back({v, p});
  check_mass(total_mass(atoms_));
}

SingleItemDistribution SingleItemDistribution::point_mass(const Rational& value) {
  return SingleItemDistribution({{value, 1}});
}

SingleItemDistribution SingleItemDistribution::uniform(const std::vector<Rational>& multiset) {
  if (multiset.empty()) throw ModelError("empty support");
  Rational each(1, static_cast<unsigned long>(multiset.size()));
  std::vector<ValueAtom> atoms;
  for (const auto& v : multiset) atoms.push_back({v, each});
  return SingleItemDistribution(std::move(atoms));
}

Rational SingleItemDistribution::prob_at_least(const Rational& x) const {
  Rational sum = 0;
  for (const auto& a : atoms_)
    if (a.value >= x) sum += a.prob;
  return sum;
}

Rational SingleItemDistribution::prob_in(const Rational& lo, const Rational& hi) const {
  Rational sum = 0;
  for (const auto& a : atoms_)
    if (a.value >= lo && a.value < hi) sum += a.prob;
  return sum;
}

bool SingleItemDistribution::operator==(const SingleItemDistribution& other) const {
  if (atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].value != other.atoms_[i].value || atoms_[i].prob != other.atoms_[i].prob) return false;
  return true;
}

JointDistribution::JointDistribution(int n, std::vector<JointAtom> atoms) : n_(n) {
  check_items(n);
  if (atoms.empty()) throw ModelError("empty support");
  std::map<Valuation, Rational> merged;
  for (auto& a : atoms) {
    if (a.values.items() != n)
      throw ModelError("valuation " + a.values.to_string() + " has " + std::to_string(a.values.items()) +
                       " entries, expected " + std::to_string(n));
    if (a.prob <= 0) throw ModelError("nonpositive probability " + to_string(a.prob));
    merged[a.values] += a.prob;
  }
  for (auto& [v, p] : merged) atoms_.push_back({v, p});
  check_mass(total_mass(atoms_));
}

SingleItemDistribution JointDistribution::marginal(int item_index) const {
  std::vector<ValueAtom> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) out.push_back({a.values[item_index], a.prob});
  return SingleItemDistribution(std::move(out));
}

JointDistribution JointDistribution::permuted(std::span<const int> perm) const {
  std::vector<JointAtom> out;
  out.reserve(atoms_.size());
  for (const auto& a : atoms_) {
    std::vector<Rational> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = a.values[perm[i]];
    out.push_back({Valuation(std::move(v)), a.prob});
  }
  return JointDistribution(n_, std::move(out));
}

bool JointDistribution::is_symmetric() const {
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  // Adjacent transpositions generate the symmetric group.
  for (int i = 0; i + 1 < n_; ++i) {
    std::swap(perm[i], perm[i + 1]);
    if (!(permuted(perm) == *this)) return false;
    std::swap(perm[i], perm[i + 1]);
  }
  return true;
}

bool JointDistribution::operator==(const JointDistribution& other) const {
  if (n_ != other.n_ || atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (!(atoms_[i].values == other.atoms_[i].values) || atoms_[i].prob != other.atoms_[i].prob) return false;
  return true;
}

JointDistribution product(std::span<const SingleItemDistribution> parts) {
  if (parts.empty()) throw ModelError("product of zero distributions");
  std::vector<JointAtom> atoms{{Valuation(), Rational(1)}};
  for (const auto& part : parts) {
    std::vector<JointAtom> next;
    next.reserve(atoms.size() * part.size());
    for (const auto& a : atoms)
      for (const auto& b : part.atoms()) {
        std::vector<Rational> v = a.values.values();
        v.push_back(b.value);
        next.push_back({Valuation(std::move(v)), a.prob * b.prob});
      }
    atoms = std::move(next);
  }
  return JointDistribution(static_cast<int>(parts.size()), std::move(atoms));
}

JointDistribution product(std::initializer_list<SingleItemDistribution> parts) {
  return product(std::span<const SingleItemDistribution>(parts.begin(), parts.size()));
}

JointDistribution mixture(const JointDistribution& first, const JointDistribution& second, const Rational& lambda) {
  if (first.items() != second.items()) throw ModelError("mixture of distributions with different item counts");
  if (lambda < 0 || lambda > 1) throw ModelError("mixture weight outside [0, 1]");
  std::vector<JointAtom> atoms;
  for (const auto& a : first.atoms())
    if (lambda != 0) atoms.push_back({a.values, lambda * a.prob});
  for (const auto& a : second.atoms())
    if (lambda != 1) atoms.push_back({a.values, (1 - lambda) * a.prob});
  return JointDistribution(first.items(), std::move(atoms));
}

Menu::Menu(int n, std::vector<Rational> ordered_prices) : n_(n) {
  check_items(n);
  const auto& order = canonical_bundles(n);
  if (ordered_prices.size() != order.size())
    throw ModelError("menu over " + std::to_string(n) + " items needs " + std::to_string(order.size()) + " prices, got " +
                     std::to_string(ordered_prices.size()));
  by_mask_.assign(std::size_t{1} << n, Rational(0));
  for (std::size_t k = 0; k < order.size(); ++k) set_price(order[k], ordered_prices[k]);
}

void Menu::set_price(Bundle s, const Rational& p) {
  if (s.empty()) throw ModelError("the empty bundle is always priced 0");
  if (!s.subset_of(Bundle::full(n_))) throw ModelError("bundle outside the item range");
  if (p < 0) throw ModelError("negative price " + bundlerev::to_string(p) + " for bundle {" + s.key() + "}");
  by_mask_[s.mask()] = p;
}

std::vector<Rational> Menu::ordered_prices() const {
  std::vector<Rational> out;
  for (Bundle s : canonical_bundles(n_)) out.push_back(price(s));
  return out;
}

Menu Menu::swapped() const {
  if (n_ != 2) throw ModelError("swapped() needs a two-item menu");
  return two(b(), a(), c());
}

std::string Menu::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& p : ordered_prices()) {
    if (!first) out += ", ";
    first = false;
    out += bundlerev::to_string(p);
  }
  return out + ")";
}

bool is_submodular(const Menu& m) {
  const std::uint32_t full = Bundle::full(m.items()).mask();
  for (std::uint32_t s = 1; s <= full; ++s)
    for (std::uint32_t t = s + 1; t <= full; ++t) {
      Bundle S(s), T(t);
      if (S.subset_of(T) || T.subset_of(S)) continue;
      if (m.price(S) + m.price(T) < m.price(S & T) + m.price(S | T)) return false;
    }
  return true;
}

bool is_subadditive(const Menu& m) {
  const std::uint32_t full = Bundle::full(m.items()).mask();
  for (std::uint32_t s = 1; s <= full; ++s)
    for (std::uint32_t t = s; t <= full; ++t) {
      Bundle S(s), T(t);
      if (m.price(S) + m.price(T) < m.price(S | T)) return false;
    }
  return true;
}

bool is_symmetric(const Menu& m) {
  std::vector<const Rational*> by_size(m.items() + 1, nullptr);
  for (Bundle s : canonical_bundles(m.items())) {
    auto& ref = by_size[s.size()];
    if (ref == nullptr)
      ref = &m.price(s);
    else if (*ref != m.price(s))
      return false;
  }
  return true;
}

bool is_additive(const Menu& m) {
  for (Bundle s : canonical_bundles(m.items())) {
    Rational sum = 0;
    for (int i : s.items()) sum += m.price(Bundle::of({i}));
    if (sum != m.price(s)) return false;
  }
  return true;
}

bool is_bundle_only(const Menu& m) {
  const Rational& grand = m.price(Bundle::full(m.items()));
  for (Bundle s : canonical_bundles(m.items()))
    if (m.price(s) != grand) return false;
  return true;
}

bool is_bundle_monotone(const Menu& m) {
  for (Bundle s : canonical_bundles(m.items()))
    for (int i = 1; i <= m.items(); ++i)
      if (!s.contains(i) && m.price(s) > m.price(s | Bundle::of({i}))) return false;
  return true;
}

Menu normalize(const Menu& m) {
  if (m.items() != 2) throw ModelError("normalize() needs a two-item menu");
  const Rational& c = m.c();
  return Menu::two(std::min(m.a(), c), std::min(m.b(), c), c);
}

Menu monotone_closure(const Menu& m) {
  Menu out = m;
  const auto& order = canonical_bundles(m.items());
  // Largest bundles first so each superset is already closed.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Rational best = out.price(*it);
    for (int i = 1; i <= m.items(); ++i)
      if (!it->contains(i)) best = std::min(best, out.price(*it | Bundle::of({i})));
    out.set_price(*it, best);
  }
  return out;
}

}  // namespace bundlerev
