#pragma once

#include <bundlerev/model.hpp>

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace bundlerev {

struct LotteryEntry {
  std::vector<Rational> alloc;  // per-item allocation probability
  Rational pay;

  bool is_null() const;
  bool operator==(const LotteryEntry&) const = default;
};

/// Entries keep their given order; a null entry is appended when missing.
class RandomizedMenu {
 public:
  RandomizedMenu() = default;
  RandomizedMenu(int n, std::vector<LotteryEntry> entries);

  /// Deterministic menu as 0/1 lotteries, in canonical bundle order after the null entry.
  static RandomizedMenu from_menu(const Menu& m);

  int items() const { return n_; }
  const std::vector<LotteryEntry>& entries() const { return entries_; }
  const LotteryEntry& operator[](std::size_t k) const { return entries_[k]; }
  std::size_t size() const { return entries_.size(); }

 private:
  int n_ = 0;
  std::vector<LotteryEntry> entries_;
};

RandomizedMenu parse_randomized_menu(const nlohmann::json& j);
RandomizedMenu load_randomized_menu(const std::string& path);
nlohmann::json to_json(const RandomizedMenu& m);

/// Σ v_i·alloc_i − pay.
Rational entry_utility(const LotteryEntry& e, const Valuation& v);

struct RandomChoice {
  std::size_t index = 0;
  Rational utility;
  Rational payment;
};

/// Utility-maximizing entry; ties go to the higher payment, then the lower index.
RandomChoice rchoice(const RandomizedMenu& m, const Valuation& v);

enum class CombinationRule { capped_additive, independent_lotteries };

std::string to_string(CombinationRule r);
CombinationRule parse_rule(std::string_view name);  // "capped" | "independent" and the long names

/// Combined allocation of several purchases (folded pairwise) minus the
/// sum of their payments. `picks` index into the menu.
Rational false_name_utility(const RandomizedMenu& m, const Valuation& v, const std::vector<std::size_t>& picks,
                            CombinationRule rule);

struct FalseNameDeviation {
  std::vector<std::size_t> picks;  // ascending
  Rational utility;
  Rational truthful_utility;

  Rational gain() const { return utility - truthful_utility; }
  bool improves() const { return utility > truthful_utility; }
};

inline constexpr int kMaxFalseNamePicks = 3;

/// Best multiset of at most k purchases; ties go to fewer picks, then the
/// lexicographically smaller index list. Refuses k > 3.
FalseNameDeviation best_false_name_deviation(const RandomizedMenu& m, const Valuation& v, CombinationRule rule,
                                             int k = 2);

/// One allocation and payment per atom of a joint distribution, in atom order.
struct DirectMechanism {
  std::vector<std::vector<Rational>> alloc;
  std::vector<Rational> pay;

  std::size_t size() const { return pay.size(); }
};

struct DirectMechanismF {
  std::vector<std::vector<double>> alloc;
  std::vector<double> pay;

  std::size_t size() const { return pay.size(); }
};

/// Each type's rchoice from the menu.
DirectMechanism mechanism_from_menu(const RandomizedMenu& m, const JointDistribution& d);

Rational expected_payment(const DirectMechanism& mech, const JointDistribution& d);
/// Expected payment when each type buys its rchoice.
Rational expected_revenue(const RandomizedMenu& m, const JointDistribution& d);

struct IcViolation {
  enum class Kind { ic, ir, range } kind = Kind::ic;
  std::size_t type = 0;       // the type whose constraint fails
  std::size_t deviation = 0;  // the report it prefers (IC only)
  double amount = 0;          // utility gain from deviating, or the IR / range shortfall
};

struct IcReport {
  bool ok = true;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<IcViolation> violations;  // first few, in (type, deviation) order

  static constexpr std::size_t kKept = 32;
};

/// All |types|² IC constraints, IR, and allocations in [0, 1]; exact.
IcReport verify_ic_ir(const DirectMechanism& mech, const JointDistribution& d);
/// Same checks with slack `tolerance` for real-valued mechanisms.
IcReport verify_ic_ir(const DirectMechanismF& mech, const JointDistribution& d, double tolerance = 1e-9);

enum class LpMethod {
  exact,     // rational pivoting throughout
  floating,  // double pivoting, then an exact optimality certificate; falls back to exact
};

struct LpResult {
  DirectMechanism mechanism;
  Rational revenue;
  double float_revenue = 0;  // objective of the double solve (floating only)
  LpMethod method = LpMethod::exact;
  bool certified = false;    // floating basis proven optimal in exact arithmetic
  bool fell_back = false;    // certificate failed and the exact path ran
  std::size_t rounds = 0;    // cutting-plane rounds
  std::size_t rows = 0;      // constraints in the final dictionary
  std::size_t pivots = 0;
  double seconds = 0;
};

/// Revenue-maximizing IC and IR direct mechanism. Variables are allocations
/// x_t ∈ [0,1]^n and utilities u_t >= 0 (payment v_t·x_t − u_t); IC rows are
/// added lazily, the most violated one per type each round.
LpResult lp_optimal(const JointDistribution& d, LpMethod method = LpMethod::exact);

}  // namespace bundlerev
