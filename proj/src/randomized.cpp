#include "bundlerev/randomized.hpp"

#include "bundlerev/io.hpp"
#include "bundlerev/lp.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>

namespace bundlerev {

bool LotteryEntry::is_null() const {
  return sgn(pay) == 0 && std::all_of(alloc.begin(), alloc.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RandomizedMenu::RandomizedMenu(int n, std::vector<LotteryEntry> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1 || n > kMaxItems) throw ModelError("randomized menu item count " + std::to_string(n) + " out of range");
  bool has_null = false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& e = entries_[k];
    const std::string where = "entry " + std::to_string(k);
    if (static_cast<int>(e.alloc.size()) != n) throw ModelError(where + ": allocation has " + std::to_string(e.alloc.size()) + " items, expected " + std::to_string(n));
    for (const auto& q : e.alloc)
      if (sgn(q) < 0 || q > 1) throw ModelError(where + ": allocation probability " + to_string(q) + " outside [0, 1]");
    if (sgn(e.pay) < 0) throw ModelError(where + ": negative payment " + to_string(e.pay));
    has_null = has_null || e.is_null();
  }
  if (!has_null) entries_.push_back({std::vector<Rational>(n, Rational(0)), Rational(0)});
}

RandomizedMenu RandomizedMenu::from_menu(const Menu& m) {
  const int n = m.items();
  std::vector<LotteryEntry> entries{{std::vector<Rational>(n, Rational(0)), Rational(0)}};
  for (Bundle s : canonical_bundles(n)) {
    LotteryEntry e{std::vector<Rational>(n, Rational(0)), m.price(s)};
    for (int i : s.items()) e.alloc[i - 1] = 1;
    entries.push_back(std::move(e));
  }
  return RandomizedMenu(n, std::move(entries));
}

RandomizedMenu parse_randomized_menu(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("items") || !j.contains("entries"))
    throw InputError("", "randomized menu needs \"items\" and \"entries\"");
  if (!j["items"].is_number_integer()) throw InputError("items", "expected an integer");
  const int n = j["items"].get<int>();
  if (!j["entries"].is_array()) throw InputError("entries", "expected an array");
  std::vector<LotteryEntry> entries;
  for (std::size_t k = 0; k < j["entries"].size(); ++k) {
    const auto& node = j["entries"][k];
    const std::string where = "entries[" + std::to_string(k) + "]";
    if (!node.is_object() || !node.contains("alloc") || !node.contains("pay") || !node["alloc"].is_array())
      throw InputError(where, "expected {\"alloc\": [...], \"pay\": ...}");
    LotteryEntry e;
    for (std::size_t i = 0; i < node["alloc"].size(); ++i)
      e.alloc.push_back(parse_rational_field(node["alloc"][i], where + ".alloc[" + std::to_string(i) + "]"));
    e.pay = parse_rational_field(node["pay"], where + ".pay");
    entries.push_back(std::move(e));
  }
  try {
    return RandomizedMenu(n, std::move(entries));
  } catch (const InputError&) {
    throw;
  } catch (const ModelError& e) {
    throw InputError("entries", e.what());
  }
}

RandomizedMenu load_randomized_menu(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return parse_randomized_menu(read_json(in));
  } catch (const InputError& e) {
    throw InputError(path, e.what());
  }
}

nlohmann::json to_json(const RandomizedMenu& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : m.entries()) {
    nlohmann::json alloc = nlohmann::json::array();
    for (const auto& q : e.alloc) alloc.push_back(to_string(q));
    entries.push_back({{"alloc", alloc}, {"pay", to_string(e.pay)}});
  }
  return {{"items", m.items()}, {"entries", entries}};
}

namespace {

void require_dims(const RandomizedMenu& m, const Valuation& v) {
  if (v.items() != m.items())
    throw ModelError("valuation has " + std::to_string(v.items()) + " items, menu has " + std::to_string(m.items()));
}

Rational dot(const std::vector<Rational>& v, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * x[i];
  return s;
}

}  // namespace

Rational entry_utility(const LotteryEntry& e, const Valuation& v) { return dot(v.values(), e.alloc) - e.pay; }

RandomChoice rchoice(const RandomizedMenu& m, const Valuation& v) {
  require_dims(m, v);
  std::optional<RandomChoice> best;
  for (std::size_t k = 0; k < m.size(); ++k) {
    Rational u = entry_utility(m[k], v);
    if (!best || u > best->utility || (u == best->utility && m[k].pay > best->payment))
      best = RandomChoice{k, std::move(u), m[k].pay};
  }
  return *best;
}

std::string to_string(CombinationRule r) {
  return r == CombinationRule::capped_additive ? "capped-additive" : "independent-lotteries";
}

CombinationRule parse_rule(std::string_view name) {
  if (name == "capped" || name == "capped-additive") return CombinationRule::capped_additive;
  if (name == "independent" || name == "independent-lotteries" || name == "independent-lotteries-nonadaptive")
    return CombinationRule::independent_lotteries;
  throw ModelError("unknown combination rule '" + std::string(name) + "'");
}

Rational false_name_utility(const RandomizedMenu& m, const Valuation& v, const std::vector<std::size_t>& picks,
                            CombinationRule rule) {
  require_dims(m, v);
  if (picks.empty()) throw ModelError("false_name_utility needs at least one pick");
  std::vector<Rational> alloc(m.items(), Rational(0));
  Rational paid = 0;
  for (std::size_t k : picks) {
    if (k >= m.size()) throw ModelError("pick " + std::to_string(k) + " is not a menu entry");
    const auto& e = m[k];
    for (int i = 0; i < m.items(); ++i) {
      if (rule == CombinationRule::capped_additive) {
        alloc[i] += e.alloc[i];
        if (alloc[i] > 1) alloc[i] = 1;
      } else
        alloc[i] = 1 - (1 - alloc[i]) * (1 - e.alloc[i]);
    }
    paid += e.pay;
  }
  return dot(v.values(), alloc) - paid;
}

namespace {

bool better_deviation(const Rational& u, const std::vector<std::size_t>& picks, const FalseNameDeviation& incumbent) {
  if (u != incumbent.utility) return u > incumbent.utility;
  if (picks.size() != incumbent.picks.size()) return picks.size() < incumbent.picks.size();
  return picks < incumbent.picks;
}

void extend(const RandomizedMenu& m, const Valuation& v, CombinationRule rule, int k, std::vector<std::size_t>& picks,
            std::optional<FalseNameDeviation>& best) {
  Rational u = false_name_utility(m, v, picks, rule);
  if (!best || better_deviation(u, picks, *best)) best = FalseNameDeviation{picks, std::move(u), 0};
  if (static_cast<int>(picks.size()) == k) return;
  for (std::size_t next = picks.back(); next < m.size(); ++next) {
    picks.push_back(next);
    extend(m, v, rule, k, picks, best);
    picks.pop_back();
  }
}

}  // namespace

FalseNameDeviation best_false_name_deviation(const RandomizedMenu& m, const Valuation& v, CombinationRule rule, int k) {
  require_dims(m, v);
  if (k < 1) throw ModelError("false-name deviation needs k >= 1");
  if (k > kMaxFalseNamePicks)
    throw ModelError("exhaustive false-name enumeration is limited to k <= " + std::to_string(kMaxFalseNamePicks) + ", got " + std::to_string(k));

  const std::size_t entries = m.size();
  std::vector<std::optional<FalseNameDeviation>> local(entries);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t first = 0; first < entries; ++first) {
    std::vector<std::size_t> picks{first};
    extend(m, v, rule, k, picks, local[first]);
  }
  std::optional<FalseNameDeviation> best;
  for (auto& l : local)
    if (l && (!best || better_deviation(l->utility, l->picks, *best))) best = std::move(l);
  best->truthful_utility = rchoice(m, v).utility;
  return *best;
}

DirectMechanism mechanism_from_menu(const RandomizedMenu& m, const JointDistribution& d) {
  if (d.items() != m.items()) throw ModelError("distribution and menu disagree on the item count");
  DirectMechanism mech;
  for (const auto& atom : d.atoms()) {
    const auto& e = m[rchoice(m, atom.values).index];
    mech.alloc.push_back(e.alloc);
    mech.pay.push_back(e.pay);
  }
  return mech;
}

Rational expected_payment(const DirectMechanism& mech, const JointDistribution& d) {
  if (mech.size() != d.size()) throw ModelError("mechanism has " + std::to_string(mech.size()) + " types, distribution has " + std::to_string(d.size()));
  Rational total = 0;
  for (std::size_t t = 0; t < d.size(); ++t) total += d.atoms()[t].prob * mech.pay[t];
  return total;
}

Rational expected_revenue(const RandomizedMenu& m, const JointDistribution& d) {
  return expected_payment(mechanism_from_menu(m, d), d);
}

namespace {

double to_double_any(const Rational& q) { return to_double(q); }
double to_double_any(double x) { return x; }

template <class Num, class Mech, class Conv>
IcReport check_ic_ir(const Mech& mech, const JointDistribution& d, const Num& slack, Conv conv) {
  const std::size_t T = d.size();
  const int n = d.items();
  if (mech.size() != T) throw ModelError("mechanism has " + std::to_string(mech.size()) + " types, distribution has " + std::to_string(T));

  std::vector<std::vector<Num>> values(T);
  for (std::size_t t = 0; t < T; ++t)
    for (int i = 0; i < n; ++i) values[t].push_back(conv(d.atoms()[t].values[i]));
  auto utility = [&](std::size_t t, std::size_t s) {
    Num u = -mech.pay[s];
    for (int i = 0; i < n; ++i) u += values[t][i] * mech.alloc[s][i];
    return u;
  };

  std::vector<std::vector<IcViolation>> found(T);
  std::vector<std::size_t> counts(T, 0);
#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < T; ++t) {
    auto record = [&](IcViolation v) {
      ++counts[t];
      if (found[t].size() < IcReport::kKept) found[t].push_back(v);
    };
    for (int i = 0; i < n; ++i) {
      const Num& x = mech.alloc[t][i];
      if (x < -slack) record({IcViolation::Kind::range, t, t, -to_double_any(x)});
      if (x > Num(1) + slack) record({IcViolation::Kind::range, t, t, to_double_any(x) - 1});
    }
    const Num truthful = utility(t, t);
    if (truthful < -slack) record({IcViolation::Kind::ir, t, t, -to_double_any(truthful)});
    for (std::size_t s = 0; s < T; ++s) {
      if (s == t) continue;
      const Num gain = utility(t, s) - truthful;
      if (gain > slack) record({IcViolation::Kind::ic, t, s, to_double_any(gain)});
    }
  }
  IcReport report;
  report.checked = T * T + T * static_cast<std::size_t>(n);
  for (std::size_t t = 0; t < T; ++t) {
    report.violation_count += counts[t];
    for (const auto& v : found[t])
      if (report.violations.size() < IcReport::kKept) report.violations.push_back(v);
  }
  report.ok = report.violation_count == 0;
  return report;
}

}  // namespace

IcReport verify_ic_ir(const DirectMechanism& mech, const JointDistribution& d) {
  return check_ic_ir<Rational>(mech, d, Rational(0), [](const Rational& q) { return q; });
}

IcReport verify_ic_ir(const DirectMechanismF& mech, const JointDistribution& d, double tolerance) {
  return check_ic_ir<double>(mech, d, tolerance, [](const Rational& q) { return to_double(q); });
}

namespace {

// Variable layout: x(t, i) = t·(n+1) + i, u(t) = t·(n+1) + n.
struct LpInstance {
  const JointDistribution& d;
  std::size_t T;
  int n;
  std::size_t width() const { return T * (n + 1); }
  std::size_t x(std::size_t t, int i) const { return t * (n + 1) + i; }
  std::size_t u(std::size_t t) const { return t * (n + 1) + n; }
  const Rational& v(std::size_t t, int i) const { return d.atoms()[t].values[i]; }
  const Rational& mu(std::size_t t) const { return d.atoms()[t].prob; }

  std::vector<Rational> objective() const {
    std::vector<Rational> c(width(), Rational(0));
    for (std::size_t t = 0; t < T; ++t) {
      for (int i = 0; i < n; ++i) c[x(t, i)] = mu(t) * v(t, i);
      c[u(t)] = -mu(t);
    }
    return c;
  }

  struct Row {
    std::vector<Rational> coefs;
    Rational rhs;
  };

  Row bound_row(std::size_t t, int i) const {
    Row r{std::vector<Rational>(width(), Rational(0)), Rational(1)};
    r.coefs[x(t, i)] = 1;
    return r;
  }

  // Type t reporting s: u_s + (v_t − v_s)·x_s − u_t <= 0.
  Row ic_row(std::size_t t, std::size_t s) const {
    Row r{std::vector<Rational>(width(), Rational(0)), Rational(0)};
    r.coefs[u(s)] += 1;
    r.coefs[u(t)] -= 1;
    for (int i = 0; i < n; ++i) r.coefs[x(s, i)] += v(t, i) - v(s, i);
    return r;
  }

  // Most violated IC row per type, violation above `threshold`.
  template <class Num>
  std::vector<std::pair<std::size_t, std::size_t>> separate(const std::vector<Num>& z, const Num& threshold,
                                                            const std::vector<std::vector<Num>>& vals) const {
    std::vector<std::pair<std::size_t, std::size_t>> cuts;
    for (std::size_t t = 0; t < T; ++t) {
      std::optional<std::size_t> worst;
      Num worst_amount = threshold;
      for (std::size_t s = 0; s < T; ++s) {
        if (s == t) continue;
        Num amount = z[u(s)] - z[u(t)];
        for (int i = 0; i < n; ++i) amount += (vals[t][i] - vals[s][i]) * z[x(s, i)];
        if (amount > worst_amount) {
          worst = s;
          worst_amount = amount;
        }
      }
      if (worst) cuts.emplace_back(t, *worst);
    }
    return cuts;
  }

  DirectMechanism mechanism(const std::vector<Rational>& z) const {
    DirectMechanism m;
    for (std::size_t t = 0; t < T; ++t) {
      std::vector<Rational> a;
      Rational pay = -z[u(t)];
      for (int i = 0; i < n; ++i) {
        a.push_back(z[x(t, i)]);
        pay += v(t, i) * z[x(t, i)];
      }
      m.alloc.push_back(std::move(a));
      m.pay.push_back(std::move(pay));
    }
    return m;
  }
};

template <class Num, class Conv>
std::vector<std::vector<Num>> type_values(const LpInstance& lp, Conv conv) {
  std::vector<std::vector<Num>> vals(lp.T);
  for (std::size_t t = 0; t < lp.T; ++t)
    for (int i = 0; i < lp.n; ++i) vals[t].push_back(conv(lp.v(t, i)));
  return vals;
}

template <class Num, class Conv>
lp::Dictionary<Num> cutting_planes(const LpInstance& inst, std::vector<LpInstance::Row>& rows, const Num& threshold,
                                   Conv conv, LpResult& out) {
  auto convert = [&](const std::vector<Rational>& v) {
    std::vector<Num> c;
    c.reserve(v.size());
    for (const auto& q : v) c.push_back(conv(q));
    return c;
  };
  lp::Dictionary<Num> dict(convert(inst.objective()));
  for (std::size_t t = 0; t < inst.T; ++t)
    for (int i = 0; i < inst.n; ++i) rows.push_back(inst.bound_row(t, i));
  for (const auto& r : rows) dict.add_row(convert(r.coefs), conv(r.rhs));
  const auto vals = type_values<Num>(inst, conv);
  for (;;) {
    ++out.rounds;
    if (dict.solve() != lp::Status::optimal) throw std::logic_error("revenue LP did not reach an optimum");
    const auto cuts = inst.separate(dict.primal_values(), threshold, vals);
    if (cuts.empty()) break;
    for (auto [t, s] : cuts) {
      rows.push_back(inst.ic_row(t, s));
      dict.add_row(convert(rows.back().coefs), conv(rows.back().rhs));
    }
  }
  out.rows = dict.rows();
  out.pivots = dict.pivots();
  return dict;
}

// Exact optimality check of the floating basis: the basic solution and its
// duals are recomputed in rationals, then primal feasibility against every
// IC row, dual feasibility and complementary slackness are verified.
std::optional<std::vector<Rational>> certify(const LpInstance& inst, const std::vector<LpInstance::Row>& rows,
                                             const lp::Dictionary<double>& dict) {
  const std::size_t W = inst.width();
  std::vector<std::size_t> J, K;
  for (std::size_t j = 0; j < W; ++j)
    if (dict.is_basic(j)) J.push_back(j);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!dict.is_basic(W + r)) K.push_back(r);
  if (J.size() != K.size()) return std::nullopt;

  std::vector<std::vector<Rational>> A(K.size(), std::vector<Rational>(J.size())), At(J.size(), std::vector<Rational>(K.size()));
  std::vector<Rational> b, cJ;
  const auto c = inst.objective();
  for (std::size_t a = 0; a < K.size(); ++a) {
    for (std::size_t bcol = 0; bcol < J.size(); ++bcol) {
      A[a][bcol] = rows[K[a]].coefs[J[bcol]];
      At[bcol][a] = A[a][bcol];
    }
    b.push_back(rows[K[a]].rhs);
  }
  for (std::size_t j : J) cJ.push_back(c[j]);

  const auto zJ = lp::solve_square(A, b);
  const auto y = lp::solve_square(At, cJ);
  if (!zJ || !y) return std::nullopt;

  std::vector<Rational> z(W, Rational(0));
  for (std::size_t a = 0; a < J.size(); ++a) {
    if (sgn((*zJ)[a]) < 0) return std::nullopt;
    z[J[a]] = (*zJ)[a];
  }
  for (const auto& q : *y)
    if (sgn(q) < 0) return std::nullopt;
  for (std::size_t j = 0; j < W; ++j) {
    if (dict.is_basic(j)) continue;
    Rational reduced = c[j];
    for (std::size_t a = 0; a < K.size(); ++a) reduced -= (*y)[a] * rows[K[a]].coefs[j];
    if (sgn(reduced) > 0) return std::nullopt;
  }
  for (std::size_t t = 0; t < inst.T; ++t)
    for (int i = 0; i < inst.n; ++i)
      if (z[inst.x(t, i)] > 1) return std::nullopt;
  const auto vals = type_values<Rational>(inst, [](const Rational& q) { return q; });
  if (!inst.separate(z, Rational(0), vals).empty()) return std::nullopt;
  return z;
}

}  // namespace

LpResult lp_optimal(const JointDistribution& d, LpMethod method) {
  const auto start = std::chrono::steady_clock::now();
  if (d.size() == 0) throw ModelError("revenue LP needs at least one type");
  const LpInstance inst{d, d.size(), d.items()};
  LpResult out;
  out.method = method;

  std::optional<std::vector<Rational>> z;
  if (method == LpMethod::floating) {
    std::vector<LpInstance::Row> rows;
    double scale = 1;
    for (const auto& atom : d.atoms())
      for (const auto& q : atom.values.values()) scale = std::max(scale, to_double(q));
    auto dict = cutting_planes<double>(inst, rows, 1e-9 * scale, [](const Rational& q) { return to_double(q); }, out);
    out.float_revenue = dict.objective();
    z = certify(inst, rows, dict);
    out.certified = z.has_value();
    out.fell_back = !out.certified;
  }
  if (!z) {
    std::vector<LpInstance::Row> rows;
    LpResult exact_stats;
    auto dict = cutting_planes<Rational>(inst, rows, Rational(0), [](const Rational& q) { return q; }, exact_stats);
    out.rounds += exact_stats.rounds;
    out.rows = exact_stats.rows;
    out.pivots += exact_stats.pivots;
    z = dict.primal_values();
  }
  out.mechanism = inst.mechanism(*z);
  out.revenue = expected_payment(out.mechanism, d);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace bundlerev
