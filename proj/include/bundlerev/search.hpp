#pragma once

#include <bundlerev/model.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bundlerev {

enum class SearchConstraint { unrestricted, symmetric, submodular, symmetric_submodular, additive, bundle_only };
enum class GridMode { integer, support_sums, explicit_sets };

std::string to_string(SearchConstraint c);
std::string to_string(GridMode g);
SearchConstraint parse_constraint(std::string_view name);
bool satisfies(const Menu& m, SearchConstraint c);

/// Per-bundle candidate prices, sorted and duplicate free.
struct CandidateGrid {
  int items = 0;
  GridMode mode = GridMode::explicit_sets;
  std::vector<std::vector<Rational>> prices;  // indexed by bundle mask; entry 0 unused

  const std::vector<Rational>& of(Bundle s) const { return prices[s.mask()]; }
  /// Number of menus in the full cartesian product (saturates at UINT64_MAX).
  std::uint64_t combinations() const;
  /// Every candidate of a superset that fits under a bundle's largest
  /// candidate is also a candidate of that bundle. Integer grids always are.
  bool closed_under_supersets() const;
};

/// integer: bundle S gets {0, 1, ..., max over the support of v(S)}; needs
/// integer support values. support_sums: {Σ_{i∈S} x_i : x_i ∈ support_i ∪ {0}}.
CandidateGrid candidate_grid(const JointDistribution& d, GridMode mode);

/// Sets listed in canonical bundle order.
CandidateGrid explicit_grid(int n, std::vector<std::vector<Rational>> ordered_sets);

/// Caps bundle `s` at `max_price` (integer grids are rebuilt up to it).
void override_max_price(CandidateGrid& g, Bundle s, const Rational& max_price);

struct SearchOptions {
  /// Skip menus with p(S) > p(T) for some S ⊂ T. Such a menu sells S to no
  /// one and earns exactly what its monotone closure earns, so skipping is
  /// exact; it is applied only on grids closed under supersets.
  bool monotone_pruning = true;
};

struct SearchResult {
  Menu best;
  Rational revenue;
  std::uint64_t menus_examined = 0;
  SearchConstraint constraint = SearchConstraint::unrestricted;
  GridMode mode = GridMode::explicit_sets;
  bool pruned = false;  // whether monotone pruning was active
  double seconds = 0;
};

/// Thrown when no menu in the grid satisfies the constraint.
class InfeasibleGrid : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Revenue-maximizing menu over the grid's cartesian product restricted to
/// the constraint. Ties go to the lexicographically smallest price vector in
/// canonical bundle order. Work is split across OpenMP threads by prefixes of
/// the singleton prices; the answer does not depend on the thread count.
SearchResult search_optimal(const JointDistribution& d, SearchConstraint c, const CandidateGrid& g,
                            const SearchOptions& opts = {});

/// Single-threaded reference for search_optimal.
SearchResult search_optimal_serial(const JointDistribution& d, SearchConstraint c, const CandidateGrid& g,
                                   const SearchOptions& opts = {});

/// Reference oracle: every menu of the cartesian product is evaluated with
/// the exact rational buyer model, no pruning and no integer scaling.
/// Refuses grids above `limit` combinations.
SearchResult search_naive(const JointDistribution& d, SearchConstraint c, const CandidateGrid& g,
                          std::uint64_t limit = 1'000'000);

struct GapReport {
  SearchResult drev;    // unrestricted
  SearchResult srev;    // additive
  SearchResult brev;    // bundle only
  SearchResult smdrev;  // submodular
  SearchResult symdrev; // symmetric

  /// num/den, or nothing when den earns zero.
  static std::optional<Rational> ratio(const SearchResult& num, const SearchResult& den);
};

GapReport gap_report(const JointDistribution& d, const CandidateGrid& g);

}  // namespace bundlerev
