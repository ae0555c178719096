#pragma once

#include <bundlerev/rational.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bundlerev {

inline constexpr int kMaxItems = 16;

/// Raised when a distribution, menu or valuation breaks its invariants.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A subset of {1..n}; item i lives in bit i-1.
class Bundle {
 public:
  constexpr Bundle() = default;
  constexpr explicit Bundle(std::uint32_t mask) : mask_(mask) {}

  static Bundle of(std::initializer_list<int> items);
  static constexpr Bundle full(int n) { return Bundle((std::uint32_t{1} << n) - 1); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int item) const { return (mask_ >> (item - 1)) & 1U; }
  int size() const;
  std::vector<int> items() const;  // ascending, 1-based

  /// "1,2" style key used by the menu file format.
  std::string key() const;
  static Bundle from_key(std::string_view key, int n);

  constexpr bool subset_of(Bundle other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Bundle operator|(Bundle o) const { return Bundle(mask_ | o.mask_); }
  constexpr Bundle operator&(Bundle o) const { return Bundle(mask_ & o.mask_); }
  constexpr bool operator==(const Bundle&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Nonempty bundles of n items ordered by cardinality, then lexicographically
/// by sorted item list: {1},{2},{3},{1,2},{1,3},{2,3},{1,2,3}.
const std::vector<Bundle>& canonical_bundles(int n);

/// Strict total order used for tie-breaking between equal-payment bundles:
/// larger cardinality first, then lexicographically smaller item list.
bool preferred_on_tie(Bundle lhs, Bundle rhs);

class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<Rational> values);
  Valuation(std::initializer_list<Rational> values) : Valuation(std::vector<Rational>(values)) {}

  int items() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int item_index) const { return values_[item_index]; }
  const std::vector<Rational>& values() const { return values_; }

  /// Additive value of a bundle.
  Rational of(Bundle s) const;

  /// Coordinatewise <=.
  bool dominated_by(const Valuation& other) const;

  auto operator<=>(const Valuation& other) const { return compare(other); }
  bool operator==(const Valuation& other) const { return values_ == other.values_; }

  std::string to_string() const;

 private:
  std::strong_ordering compare(const Valuation& other) const;
  std::vector<Rational> values_;
};

struct ValueAtom {
  Rational value;
  Rational prob;
};

class SingleItemDistribution {
 public:
  SingleItemDistribution() = default;
  /// Merges duplicate values, sorts, and checks total mass 1.
  explicit SingleItemDistribution(std::vector<ValueAtom> atoms);

  static SingleItemDistribution point_mass(const Rational& value);
  static SingleItemDistribution uniform(const std::vector<Rational>& multiset);

  const std::vector<ValueAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  Rational prob_at_least(const Rational& x) const;               // Pr[v >= x]
  Rational prob_in(const Rational& lo, const Rational& hi) const;  // Pr[lo <= v < hi]

  bool operator==(const SingleItemDistribution& other) const;

 private:
  std::vector<ValueAtom> atoms_;
};

struct JointAtom {
  Valuation values;
  Rational prob;
};

class JointDistribution {
 public:
  JointDistribution() = default;
  /// Merges duplicate valuations, sorts lexicographically, and checks mass 1.
  JointDistribution(int n, std::vector<JointAtom> atoms);

  int items() const { return n_; }
  const std::vector<JointAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  SingleItemDistribution marginal(int item_index) const;

  /// Invariant under every permutation of item labels.
  bool is_symmetric() const;

  /// Relabels items: result item i takes values of input item perm[i].
  JointDistribution permuted(std::span<const int> perm) const;

  bool operator==(const JointDistribution& other) const;

 private:
  int n_ = 0;
  std::vector<JointAtom> atoms_;
};

JointDistribution product(std::span<const SingleItemDistribution> parts);
JointDistribution product(std::initializer_list<SingleItemDistribution> parts);

/// λ·first + (1-λ)·second over the union of supports.
JointDistribution mixture(const JointDistribution& first, const JointDistribution& second, const Rational& lambda);

class Menu {
 public:
  Menu() = default;
  /// Prices listed in canonical bundle order.
  Menu(int n, std::vector<Rational> ordered_prices);
  Menu(int n, std::initializer_list<Rational> ordered_prices)
      : Menu(n, std::vector<Rational>(ordered_prices)) {}

  /// Two-item menu (p1, p2, p12).
  static Menu two(const Rational& a, const Rational& b, const Rational& c) { return Menu(2, {a, b, c}); }

  int items() const { return n_; }
  const Rational& price(Bundle s) const { return by_mask_[s.mask()]; }
  void set_price(Bundle s, const Rational& p);

  std::vector<Rational> ordered_prices() const;

  // Two-item accessors.
  const Rational& a() const { return price(Bundle(1)); }
  const Rational& b() const { return price(Bundle(2)); }
  const Rational& c() const { return price(Bundle(3)); }

  /// Swaps the labels of items 1 and 2 (n = 2 only).
  Menu swapped() const;

  bool operator==(const Menu& other) const = default;
  std::string to_string() const;  // "(6, 6, 6, 7, 7, 8, 9)"

 private:
  int n_ = 0;
  std::vector<Rational> by_mask_;  // index 0 is the empty bundle, price 0
};

bool is_submodular(const Menu& m);
bool is_subadditive(const Menu& m);
bool is_symmetric(const Menu& m);
bool is_additive(const Menu& m);
bool is_bundle_only(const Menu& m);
/// p(S) <= p(T) whenever S ⊆ T.
bool is_bundle_monotone(const Menu& m);

/// Two items: caps item prices at the bundle price.
Menu normalize(const Menu& m);

/// Replaces each price with the cheapest price among its supersets. Buyer
/// choices and payments are unchanged under the library's tie-breaking.
Menu monotone_closure(const Menu& m);

}  // namespace bundlerev
