#include "bundlerev/search.hpp"

#include "bundlerev/buyer.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <set>

namespace bundlerev {

std::string to_string(SearchConstraint c) {
  switch (c) {
    case SearchConstraint::unrestricted: return "unrestricted";
    case SearchConstraint::symmetric: return "symmetric";
    case SearchConstraint::submodular: return "submodular";
    case SearchConstraint::symmetric_submodular: return "symmetric-submodular";
    case SearchConstraint::additive: return "additive";
    case SearchConstraint::bundle_only: return "bundle-only";
  }
  return "?";
}

std::string to_string(GridMode g) {
  switch (g) {
    case GridMode::integer: return "integer";
    case GridMode::support_sums: return "support-sums";
    case GridMode::explicit_sets: return "explicit";
  }
  return "?";
}

SearchConstraint parse_constraint(std::string_view name) {
  for (auto c : {SearchConstraint::unrestricted, SearchConstraint::symmetric, SearchConstraint::submodular,
                 SearchConstraint::symmetric_submodular, SearchConstraint::additive, SearchConstraint::bundle_only})
    if (to_string(c) == name) return c;
  if (name == "symmetric-and-submodular") return SearchConstraint::symmetric_submodular;
  throw ModelError("unknown constraint \"" + std::string(name) + "\"");
}

bool satisfies(const Menu& m, SearchConstraint c) {
  switch (c) {
    case SearchConstraint::unrestricted: return true;
    case SearchConstraint::symmetric: return is_symmetric(m);
    case SearchConstraint::submodular: return is_submodular(m);
    case SearchConstraint::symmetric_submodular: return is_symmetric(m) && is_submodular(m);
    case SearchConstraint::additive: return is_additive(m);
    case SearchConstraint::bundle_only: return is_bundle_only(m);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Grids

std::uint64_t CandidateGrid::combinations() const {
  std::uint64_t total = 1;
  for (Bundle s : canonical_bundles(items)) {
    const std::uint64_t k = of(s).size();
    if (k != 0 && total > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    total *= k;
  }
  return total;
}

bool CandidateGrid::closed_under_supersets() const {
  const auto& order = canonical_bundles(items);
  for (Bundle s : order) {
    const auto& own = of(s);
    for (Bundle t : order) {
      if (t == s || !s.subset_of(t)) continue;
      for (const auto& x : of(t)) {
        if (x > own.back()) break;
        if (!std::binary_search(own.begin(), own.end(), x)) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Rational> integer_range(const Rational& max) {
  mpz_class top = max.get_num() / max.get_den();  // floor, max >= 0
  std::vector<Rational> out;
  for (mpz_class k = 0; k <= top; ++k) out.emplace_back(k);
  return out;
}

}  // namespace

CandidateGrid candidate_grid(const JointDistribution& d, GridMode mode) {
  const int n = d.items();
  CandidateGrid g;
  g.items = n;
  g.mode = mode;
  g.prices.assign(std::size_t{1} << n, {});
  g.prices[0] = {Rational(0)};

  switch (mode) {
    case GridMode::integer: {
      for (const auto& atom : d.atoms())
        for (const auto& v : atom.values.values())
          if (v.get_den() != 1)
            throw ModelError("integer grid requested but the support has non-integer value " + to_string(v));
      for (Bundle s : canonical_bundles(n)) {
        Rational top = 0;
        for (const auto& atom : d.atoms()) top = std::max(top, atom.values.of(s));
        g.prices[s.mask()] = integer_range(top);
      }
      break;
    }
    case GridMode::support_sums: {
      std::vector<std::vector<Rational>> supports(n);
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> vals{Rational(0)};
        const SingleItemDistribution marginal = d.marginal(i);
        for (const auto& a : marginal.atoms()) vals.push_back(a.value);
        supports[i] = sorted_unique(std::move(vals));
      }
      for (Bundle s : canonical_bundles(n)) {
        std::vector<Rational> sums{Rational(0)};
        for (int item : s.items()) {
          std::vector<Rational> next;
          for (const auto& partial : sums)
            for (const auto& x : supports[item - 1]) next.push_back(partial + x);
          sums = sorted_unique(std::move(next));
        }
        g.prices[s.mask()] = std::move(sums);
      }
      break;
    }
    case GridMode::explicit_sets:
      throw ModelError("explicit grids are built with explicit_grid()");
  }
  return g;
}

CandidateGrid explicit_grid(int n, std::vector<std::vector<Rational>> ordered_sets) {
  const auto& order = canonical_bundles(n);
  if (ordered_sets.size() != order.size())
    throw ModelError("explicit grid needs " + std::to_string(order.size()) + " price sets, got " +
                     std::to_string(ordered_sets.size()));
  CandidateGrid g;
  g.items = n;
  g.mode = GridMode::explicit_sets;
  g.prices.assign(std::size_t{1} << n, {});
  g.prices[0] = {Rational(0)};
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (ordered_sets[k].empty()) throw ModelError("empty price set for bundle {" + order[k].key() + "}");
    for (const auto& p : ordered_sets[k])
      if (p < 0) throw ModelError("negative candidate price " + to_string(p));
    g.prices[order[k].mask()] = sorted_unique(std::move(ordered_sets[k]));
  }
  return g;
}

void override_max_price(CandidateGrid& g, Bundle s, const Rational& max_price) {
  if (max_price < 0) throw ModelError("negative maximum price");
  auto& set = g.prices.at(s.mask());
  if (g.mode == GridMode::integer) {
    set = integer_range(max_price);
    return;
  }
  std::erase_if(set, [&](const Rational& p) { return p > max_price; });
  if (set.empty()) set = {Rational(0)};
}

std::optional<Rational> GapReport::ratio(const SearchResult& num, const SearchResult& den) {
  if (den.revenue == 0) return std::nullopt;
  return Rational(num.revenue / den.revenue);
}

// ---------------------------------------------------------------------------
// Enumeration engine

namespace {

using i64 = std::int64_t;
using i128 = __int128;

constexpr i64 kScaledLimit = i64{1} << 58;

i64 to_scaled(const Rational& q, const mpz_class& scale) {
  mpz_class z = q.get_num() * (scale / q.get_den());
  if (abs(z) > mpz_class(static_cast<long>(kScaledLimit)))
    throw ModelError("instance too large for exact search: scaled value overflows 64 bits");
  return z.get_si();
}

Rational from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
  mpz_class z = (hi << 64) + lo;
  return Rational(neg ? mpz_class(-z) : z);
}

mpz_class lcm_of(const mpz_class& x, const mpz_class& y) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return out;
}

struct Problem {
  int n = 0;
  int depth = 0;  // number of bundles
  std::vector<Bundle> order;
  std::vector<int> card;
  std::vector<std::vector<i64>> cand;  // per depth, ascending
  int types = 0;
  std::vector<i64> value;   // types x depth
  std::vector<i64> weight;  // per type
  mpz_class value_scale, weight_scale;

  SearchConstraint constraint = SearchConstraint::unrestricted;
  bool prune = false;
  std::vector<int> leader;                          // first depth of equal cardinality
  std::vector<std::vector<int>> members;            // additive: singleton depths
  std::vector<std::vector<int>> immediate_subsets;  // depths of S minus one item
  std::vector<std::vector<std::array<int, 3>>> submodular_checks;  // (A, B, A∩B or -1)

  bool symmetric() const {
    return constraint == SearchConstraint::symmetric || constraint == SearchConstraint::symmetric_submodular;
  }
  bool submodular() const {
    return constraint == SearchConstraint::submodular || constraint == SearchConstraint::symmetric_submodular;
  }
};

Problem build_problem(const JointDistribution& d, SearchConstraint c, const CandidateGrid& g, const SearchOptions& opts) {
  if (g.items != d.items())
    throw ModelError("grid has " + std::to_string(g.items) + " items, distribution has " + std::to_string(d.items()));
  Problem pb;
  pb.n = d.items();
  pb.order = canonical_bundles(pb.n);
  pb.depth = static_cast<int>(pb.order.size());
  pb.constraint = c;
  pb.prune = opts.monotone_pruning && g.closed_under_supersets();

  mpz_class vs = 1;
  for (const auto& atom : d.atoms())
    for (const auto& v : atom.values.values()) vs = lcm_of(vs, v.get_den());
  for (Bundle s : pb.order)
    for (const auto& p : g.of(s)) vs = lcm_of(vs, p.get_den());
  mpz_class ws = 1;
  for (const auto& atom : d.atoms()) ws = lcm_of(ws, atom.prob.get_den());
  if (ws > mpz_class(static_cast<long>(i64{1} << 62)))
    throw ModelError("instance too large for exact search: probability denominators overflow 64 bits");
  pb.value_scale = vs;
  pb.weight_scale = ws;

  std::vector<int> depth_of(std::size_t{1} << pb.n, -1);
  for (int k = 0; k < pb.depth; ++k) depth_of[pb.order[k].mask()] = k;

  pb.card.resize(pb.depth);
  pb.cand.resize(pb.depth);
  pb.leader.resize(pb.depth);
  pb.members.resize(pb.depth);
  pb.immediate_subsets.resize(pb.depth);
  pb.submodular_checks.resize(pb.depth);
  for (int k = 0; k < pb.depth; ++k) {
    const Bundle s = pb.order[k];
    pb.card[k] = s.size();
    for (const auto& p : g.of(s)) pb.cand[k].push_back(to_scaled(p, vs));
    if (pb.cand[k].empty()) throw InfeasibleGrid("empty candidate set for bundle {" + s.key() + "}");
    pb.leader[k] = k;
    for (int j = 0; j < k; ++j)
      if (pb.card[j] == pb.card[k]) {
        pb.leader[k] = j;
        break;
      }
    for (int item : s.items()) {
      pb.members[k].push_back(depth_of[Bundle::of({item}).mask()]);
      if (s.size() > 1) pb.immediate_subsets[k].push_back(depth_of[(s.mask() & ~Bundle::of({item}).mask())]);
    }
    // Every submodularity constraint is decided once its union is priced.
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y) {
        const Bundle A = pb.order[x], B = pb.order[y];
        if ((A | B) != s || A.subset_of(B) || B.subset_of(A)) continue;
        const Bundle C = A & B;
        pb.submodular_checks[k].push_back({x, y, C.empty() ? -1 : depth_of[C.mask()]});
      }
  }

  pb.types = static_cast<int>(d.size());
  pb.value.resize(static_cast<std::size_t>(pb.types) * pb.depth);
  pb.weight.resize(pb.types);
  for (int t = 0; t < pb.types; ++t) {
    const auto& atom = d.atoms()[t];
    mpz_class w = atom.prob.get_num() * (ws / atom.prob.get_den());
    pb.weight[t] = w.get_si();
    for (int k = 0; k < pb.depth; ++k) pb.value[static_cast<std::size_t>(t) * pb.depth + k] = to_scaled(atom.values.of(pb.order[k]), vs);
  }
  return pb;
}

struct Outcome {
  bool found = false;
  i128 revenue = 0;
  std::vector<int> choice;  // candidate index per depth
  std::uint64_t examined = 0;
};

// Depth-first enumeration with per-type best responses carried down the
// bundle order, so each node costs one pass over the types.
class Walker {
 public:
  explicit Walker(const Problem& pb)
      : pb_(pb),
        price_(pb.depth, 0),
        index_(pb.depth, 0),
        util_(static_cast<std::size_t>(pb.depth + 1) * pb.types, 0),
        pay_(static_cast<std::size_t>(pb.depth + 1) * pb.types, 0),
        size_(static_cast<std::size_t>(pb.depth + 1) * pb.types, 0) {}

  // Fixes the first prefix.size() prices, then searches the rest.
  void run(const std::vector<int>& prefix, Outcome& out) {
    out_ = &out;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      index_[k] = prefix[k];
      price_[k] = pb_.cand[k][prefix[k]];
      if (static_cast<int>(k) + 1 < pb_.depth)
        apply(static_cast<int>(k));
      else
        leaf();
    }
    if (static_cast<int>(prefix.size()) < pb_.depth) descend(static_cast<int>(prefix.size()), pb_.depth);
  }

  // Collects every feasible prefix of length `stop` in lexicographic order.
  std::vector<std::vector<int>> prefixes(int stop) {
    std::vector<std::vector<int>> out;
    collect(0, stop, out);
    return out;
  }

 private:
  // Candidate index range [lo, hi) allowed at depth k given the prefix.
  bool range(int k, std::size_t& lo, std::size_t& hi) const {
    const auto& cand = pb_.cand[k];
    i64 forced = -1;
    const bool is_forced_symmetric = pb_.symmetric() && pb_.leader[k] != k;
    if (is_forced_symmetric) forced = price_[pb_.leader[k]];
    if (pb_.constraint == SearchConstraint::additive && pb_.card[k] > 1) {
      forced = 0;
      for (int j : pb_.members[k]) forced += price_[j];
    }
    if (pb_.constraint == SearchConstraint::bundle_only && k > 0) forced = price_[0];

    i64 floor_price = std::numeric_limits<i64>::min();
    if (pb_.prune)
      for (int j : pb_.immediate_subsets[k]) floor_price = std::max(floor_price, price_[j]);
    i64 ceil_price = std::numeric_limits<i64>::max();
    if (pb_.submodular())
      for (const auto& [x, y, z] : pb_.submodular_checks[k])
        ceil_price = std::min(ceil_price, price_[x] + price_[y] - (z < 0 ? 0 : price_[z]));

    if (forced >= 0) {
      if (forced < floor_price || forced > ceil_price) return false;
      auto it = std::lower_bound(cand.begin(), cand.end(), forced);
      if (it == cand.end() || *it != forced) return false;
      lo = static_cast<std::size_t>(it - cand.begin());
      hi = lo + 1;
      return true;
    }
    lo = static_cast<std::size_t>(std::lower_bound(cand.begin(), cand.end(), floor_price) - cand.begin());
    hi = static_cast<std::size_t>(std::upper_bound(cand.begin(), cand.end(), ceil_price) - cand.begin());
    return lo < hi;
  }

  void collect(int k, int stop, std::vector<std::vector<int>>& out) {
    if (k == stop) {
      out.emplace_back(index_.begin(), index_.begin() + stop);
      return;
    }
    std::size_t lo = 0, hi = 0;
    if (!range(k, lo, hi)) return;
    for (std::size_t i = lo; i < hi; ++i) {
      index_[k] = static_cast<int>(i);
      price_[k] = pb_.cand[k][i];
      collect(k + 1, stop, out);
    }
  }

  void descend(int k, int last) {
    std::size_t lo = 0, hi = 0;
    if (!range(k, lo, hi)) return;
    for (std::size_t i = lo; i < hi; ++i) {
      index_[k] = static_cast<int>(i);
      price_[k] = pb_.cand[k][i];
      if (k + 1 == last) {
        leaf();
      } else {
        apply(k);
        descend(k + 1, last);
      }
    }
  }

  // State row k+1 = best response once bundle k is priced.
  void apply(int k) {
    const int T = pb_.types;
    const i64 p = price_[k];
    const i64 c = pb_.card[k];
    const i64* in_u = &util_[static_cast<std::size_t>(k) * T];
    const i64* in_p = &pay_[static_cast<std::size_t>(k) * T];
    const i64* in_c = &size_[static_cast<std::size_t>(k) * T];
    i64* out_u = &util_[static_cast<std::size_t>(k + 1) * T];
    i64* out_p = &pay_[static_cast<std::size_t>(k + 1) * T];
    i64* out_c = &size_[static_cast<std::size_t>(k + 1) * T];
    for (int t = 0; t < T; ++t) {
      const i64 u = pb_.value[static_cast<std::size_t>(t) * pb_.depth + k] - p;
      if (u > in_u[t] || (u == in_u[t] && (p > in_p[t] || (p == in_p[t] && c > in_c[t])))) {
        out_u[t] = u;
        out_p[t] = p;
        out_c[t] = c;
      } else {
        out_u[t] = in_u[t];
        out_p[t] = in_p[t];
        out_c[t] = in_c[t];
      }
    }
  }

  void leaf() {
    const int k = pb_.depth - 1;
    const int T = pb_.types;
    const i64 p = price_[k];
    const i64 c = pb_.card[k];
    const i64* in_u = &util_[static_cast<std::size_t>(k) * T];
    const i64* in_p = &pay_[static_cast<std::size_t>(k) * T];
    const i64* in_c = &size_[static_cast<std::size_t>(k) * T];
    i128 revenue = 0;
    for (int t = 0; t < T; ++t) {
      const i64 u = pb_.value[static_cast<std::size_t>(t) * pb_.depth + k] - p;
      const bool take = u > in_u[t] || (u == in_u[t] && (p > in_p[t] || (p == in_p[t] && c > in_c[t])));
      revenue += static_cast<i128>(pb_.weight[t]) * (take ? p : in_p[t]);
    }
    ++out_->examined;
    if (!out_->found || revenue > out_->revenue) {
      out_->found = true;
      out_->revenue = revenue;
      out_->choice = index_;
    }
  }

  const Problem& pb_;
  std::vector<i64> price_;
  std::vector<int> index_;
  std::vector<i64> util_, pay_, size_;
  Outcome* out_ = nullptr;
};

SearchResult finish(const Problem& pb, const CandidateGrid& g, const Outcome& best, std::uint64_t examined,
                    std::chrono::steady_clock::time_point start) {
  if (!best.found)
    throw InfeasibleGrid("no menu in the " + to_string(g.mode) + " grid satisfies the " + to_string(pb.constraint) +
                         " constraint");
  SearchResult r;
  std::vector<Rational> prices;
  for (int k = 0; k < pb.depth; ++k) prices.push_back(g.of(pb.order[k])[best.choice[k]]);
  r.best = Menu(pb.n, std::move(prices));
  r.revenue = from_i128(best.revenue) / Rational(pb.value_scale * pb.weight_scale);
  r.revenue.canonicalize();
  r.menus_examined = examined;
  r.constraint = pb.constraint;
  r.mode = g.mode;
  r.pruned = pb.prune;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

SearchResult search_optimal_serial(const JointDistribution& d, SearchConstraint c, const CandidateGrid& g,
                                   const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Problem pb = build_problem(d, c, g, opts);
  Outcome out;
  Walker(pb).run({}, out);
  return finish(pb, g, out, out.examined, start);
}

SearchResult search_optimal(const JointDistribution& d, SearchConstraint c, const CandidateGrid& g,
                            const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Problem pb = build_problem(d, c, g, opts);
  const int split = std::min(pb.n, pb.depth - 1);
  const std::vector<std::vector<int>> tasks = Walker(pb).prefixes(split);
  std::vector<Outcome> results(tasks.size());

#pragma omp parallel
  {
    Walker walker(pb);
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < tasks.size(); ++i) walker.run(tasks[i], results[i]);
  }

  // Tasks are in lexicographic order, so a strict improvement keeps the
  // smallest price vector among equal revenues.
  Outcome best;
  std::uint64_t examined = 0;
  for (const auto& r : results) {
    examined += r.examined;
    if (r.found && (!best.found || r.revenue > best.revenue)) best = r;
  }
  return finish(pb, g, best, examined, start);
}

SearchResult search_naive(const JointDistribution& d, SearchConstraint c, const CandidateGrid& g, std::uint64_t limit) {
  const auto start = std::chrono::steady_clock::now();
  if (g.items != d.items()) throw ModelError("grid and distribution disagree on the item count");
  if (g.combinations() > limit)
    throw ModelError("naive search refuses " + std::to_string(g.combinations()) + " combinations (limit " + std::to_string(limit) + ")");
  const auto& order = canonical_bundles(g.items);
  std::vector<std::size_t> idx(order.size(), 0);
  std::optional<SearchResult> best;
  std::uint64_t examined = 0;
  for (;;) {
    std::vector<Rational> prices;
    for (std::size_t k = 0; k < order.size(); ++k) prices.push_back(g.of(order[k])[idx[k]]);
    Menu m(g.items, std::move(prices));
    ++examined;
    if (satisfies(m, c)) {
      Rational r = expected_revenue(m, d);
      if (!best || r > best->revenue) {
        best = SearchResult{};
        best->best = std::move(m);
        best->revenue = std::move(r);
      }
    }
    // Odometer with the last bundle fastest, i.e. lexicographic order.
    std::size_t k = order.size();
    while (k > 0 && ++idx[k - 1] == g.of(order[k - 1]).size()) idx[--k] = 0;
    if (k == 0) break;
  }
  if (!best)
    throw InfeasibleGrid("no menu in the " + to_string(g.mode) + " grid satisfies the " + to_string(c) + " constraint");
  best->menus_examined = examined;
  best->constraint = c;
  best->mode = g.mode;
  best->pruned = false;
  best->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return *best;
}

GapReport gap_report(const JointDistribution& d, const CandidateGrid& g) {
  GapReport r;
  r.drev = search_optimal(d, SearchConstraint::unrestricted, g);
  r.srev = search_optimal(d, SearchConstraint::additive, g);
  r.brev = search_optimal(d, SearchConstraint::bundle_only, g);
  r.smdrev = search_optimal(d, SearchConstraint::submodular, g);
  r.symdrev = search_optimal(d, SearchConstraint::symmetric, g);
  return r;
}

}  // namespace bundlerev
