#include "bundlerev/properties.hpp"

#include "bundlerev/buyer.hpp"
#include "bundlerev/constructions.hpp"
#include "bundlerev/random_instances.hpp"

#include <optional>

namespace bundlerev::properties {
namespace {

void note_margin(Report& r, const Rational& margin) {
  if (r.cases == 1 || margin < r.min_margin) r.min_margin = margin;
}

void note_violation(Report& r, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = "case " + std::to_string(r.cases - 1) + ": " + what;
}

}  // namespace

Report submodularization(std::uint64_t seed, std::size_t cases) {
  random::Rng rng(seed);
  Report r;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto f1 = random::marginal(rng), f2 = random::marginal(rng);
    const Menu m = random::strictly_supermodular_menu(rng);
    ++r.cases;
    try {
      const auto cert = submodularize2(m, f1, f2);
      note_margin(r, cert.margin());
      if (sgn(cert.margin()) < 0) note_violation(r, cert.to_json().dump());
    } catch (const TheoremViolation& e) {
      note_violation(r, e.what());
    }
  }
  return r;
}

Report symmetrization(std::uint64_t seed, std::size_t cases) {
  random::Rng rng(seed);
  Report r;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto f = random::marginal(rng);
    const Menu m = random::asymmetric_submodular_menu(rng);
    ++r.cases;
    try {
      const auto cert = symmetrize2(m, f);
      note_margin(r, cert.margin());
      if (sgn(cert.margin()) < 0) note_violation(r, cert.to_json().dump());
      const Rational lo = std::min(m.a(), m.b());
      if (m.c() <= 2 * lo) ++r.side_checks;  // identity asserted inside symmetrize2
    } catch (const TheoremViolation& e) {
      note_violation(r, e.what());
    }
  }
  return r;
}

Report three_halves(std::uint64_t seed, std::size_t cases) {
  random::Rng rng(seed);
  Report r;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto d = random::joint(rng, 2);
    const Menu m = random::strictly_supermodular_menu(rng);
    ++r.cases;
    const auto split = three_halves_decomposition(m);
    const Rational margin =
        expected_revenue(split.additive, d) + expected_revenue(split.bundle_only, d) / 2 - expected_revenue(m, d);
    note_margin(r, margin);
    if (sgn(margin) < 0) note_violation(r, "menu " + m.to_string() + " margin " + to_string(margin));
  }
  return r;
}

Report monotonicity(std::uint64_t seed, std::size_t cases) {
  random::Rng rng(seed);
  Report r;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto d = product({random::marginal(rng), random::marginal(rng)});
    const Menu m = random::submodular_menu(rng);
    ++r.cases;
    const auto report = check_monotone(m, monotonicity_grid(m, d, Rational(1, 2)));
    r.side_checks += report.pairs_checked;
    if (!report.monotone()) {
      const auto& v = report.violations.front();
      note_violation(r, "menu " + m.to_string() + ": " + v.low.to_string() + " -> " + v.high.to_string());
    }
  }
  return r;
}

Report oracle_equivalence(std::uint64_t seed, std::size_t cases) {
  random::Rng rng(seed);
  Report r;
  constexpr SearchConstraint kAll[] = {SearchConstraint::unrestricted, SearchConstraint::symmetric,
                                       SearchConstraint::submodular,   SearchConstraint::symmetric_submodular,
                                       SearchConstraint::additive,     SearchConstraint::bundle_only};
  // Draws until `cases` feasible instances were compared; side_checks counts
  // the draws where both sides agreed the grid is infeasible.
  for (std::size_t attempt = 0; r.cases < cases && attempt < 50 * cases; ++attempt) {
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    const auto d = random::joint(rng, n, 6, 8);
    const auto c = kAll[std::uniform_int_distribution<int>(0, 5)(rng)];
    const bool symmetric = c == SearchConstraint::symmetric || c == SearchConstraint::symmetric_submodular;
    const auto g = random::small_grid(rng, n, 200, 8, symmetric);
    std::optional<SearchResult> fast, naive;
    try {
      fast = search_optimal(d, c, g);
    } catch (const InfeasibleGrid&) {
    }
    try {
      naive = search_naive(d, c, g);
    } catch (const InfeasibleGrid&) {
    }
    if (!fast && !naive) {
      ++r.side_checks;
      continue;
    }
    ++r.cases;
    if (fast.has_value() != naive.has_value()) {
      note_violation(r, "feasibility disagrees under " + to_string(c));
      continue;
    }
    if (fast->revenue != naive->revenue || !(fast->best == naive->best))
      note_violation(r, to_string(c) + ": search " + fast->best.to_string() + " " + to_string(fast->revenue) +
                            " vs oracle " + naive->best.to_string() + " " + to_string(naive->revenue));
  }
  return r;
}

}  // namespace bundlerev::properties
