#include "bundlerev/constructions.hpp"

#include "bundlerev/buyer.hpp"
#include "bundlerev/io.hpp"

namespace bundlerev {
namespace {

void require_two_items(const Menu& m, const char* who) {
  if (m.items() != 2) throw ModelError(std::string(who) + " needs a two-item menu, got " + std::to_string(m.items()) + " items");
}

[[noreturn]] void violated(const ConstructionCertificate& cert, const std::string& what) {
  throw TheoremViolation(cert.construction + ": " + what + "\n" + cert.to_json().dump(2));
}

void pick_best(ConstructionCertificate& cert, const JointDistribution& d) {
  cert.candidate_revenues.clear();
  for (const auto& menu : cert.candidates) cert.candidate_revenues.push_back(expected_revenue(menu, d));
  std::size_t best = 0;
  for (std::size_t k = 1; k < cert.candidates.size(); ++k)
    if (cert.candidate_revenues[k] > cert.candidate_revenues[best]) best = k;
  cert.output = cert.candidates[best];
  cert.output_revenue = cert.candidate_revenues[best];
}

}  // namespace

nlohmann::json ConstructionCertificate::to_json() const {
  nlohmann::json cands = nlohmann::json::array();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    nlohmann::json entry = {{"menu", candidates[k].to_string()}};
    if (k < candidate_revenues.size()) entry["revenue"] = bundlerev::to_string(candidate_revenues[k]);
    cands.push_back(entry);
  }
  return {{"construction", construction},
          {"input", input.to_string()},
          {"input_revenue", bundlerev::to_string(input_revenue)},
          {"branch", branch},
          {"candidates", cands},
          {"output", output.to_string()},
          {"output_revenue", bundlerev::to_string(output_revenue)},
          {"margin", bundlerev::to_string(margin())}};
}

ConstructionCertificate submodularize2(const Menu& m, const SingleItemDistribution& first,
                                       const SingleItemDistribution& second) {
  require_two_items(m, "submodularize2");
  const JointDistribution d = product({first, second});
  ConstructionCertificate cert;
  cert.construction = "submodularize2";
  cert.input = m;
  cert.input_revenue = expected_revenue(m, d);

  const Menu norm = normalize(m);
  if (norm.c() <= norm.a() + norm.b()) {
    cert.branch = norm == m ? "already submodular" : "normalized to a submodular menu";
    cert.candidates = {norm};
    pick_best(cert, d);
  } else {
    // Relabel so the cheaper item is item 1.
    const bool swap = norm.a() > norm.b();
    const Menu work = swap ? norm.swapped() : norm;
    const SingleItemDistribution& v1 = swap ? second : first;
    const Rational a = work.a(), b = work.b(), c = work.c();

    const Rational gain = v1.prob_in(a, c - b) * a;
    const Rational loss = v1.prob_at_least(c - b) * (c - (a + b));
    Menu chosen = gain >= loss ? Menu::two(a, b, a + b) : Menu::two(c - b, b, c);
    Menu other = gain >= loss ? Menu::two(c - b, b, c) : Menu::two(a, b, a + b);
    if (swap) {
      chosen = chosen.swapped();
      other = other.swapped();
    }
    cert.branch = gain >= loss ? "item prices kept: (a, b, a+b)" : "cheaper item raised: (c-b, b, c)";
    cert.branch += "; gain " + to_string(gain) + " vs loss " + to_string(loss);
    if (swap) cert.branch += "; items relabeled";
    cert.candidates = {chosen, other};
    pick_best(cert, d);
    cert.output = chosen;
    cert.output_revenue = cert.candidate_revenues[0];
  }
  if (!is_submodular(cert.output)) violated(cert, "output menu is not submodular");
  if (cert.output_revenue < cert.input_revenue) violated(cert, "output earns less than the input");
  return cert;
}

ConstructionCertificate symmetrize2(const Menu& m, const SingleItemDistribution& f) {
  require_two_items(m, "symmetrize2");
  const JointDistribution d = product({f, f});
  ConstructionCertificate cert;
  cert.construction = "symmetrize2";
  cert.input = m;
  cert.input_revenue = expected_revenue(m, d);

  Menu work = normalize(m);
  std::string prefix;
  if (work.c() > work.a() + work.b()) {
    work = submodularize2(work, f, f).output;
    prefix = "submodularized to " + work.to_string() + "; ";
  }
  work = normalize(work);
  if (work.a() > work.b()) work = work.swapped();
  const Rational a = work.a(), b = work.b(), c = work.c();

  if (a == b) {
    cert.branch = prefix + "already symmetric";
    cert.candidates = {work};
  } else if (c <= 2 * a) {
    cert.branch = prefix + "c <= 2a: average of (a,a,c) and (b,b,c)";
    cert.candidates = {Menu::two(a, a, c), Menu::two(b, b, c)};
  } else {
    const Rational lhs = 2 * a * f.prob_in(a, c - a);
    const Rational rhs = (c - 2 * a) * f.prob_at_least(c - a);
    if (lhs >= rhs) {
      cert.branch = prefix + "c > 2a, low side heavier: (b,b,c) vs (a,a,2a)";
      cert.candidates = {Menu::two(b, b, c), Menu::two(a, a, 2 * a)};
    } else {
      cert.branch = prefix + "c > 2a, high side heavier: (b,b,c) vs (c-a,c-a,2c-2a)";
      cert.candidates = {Menu::two(b, b, c), Menu::two(c - a, c - a, 2 * c - 2 * a)};
    }
    cert.branch += "; " + to_string(lhs) + " vs " + to_string(rhs);
  }
  pick_best(cert, d);

  if (a != b && c <= 2 * a) {
    const Rational twice = 2 * expected_revenue(work, d);
    if (cert.candidate_revenues[0] + cert.candidate_revenues[1] != twice)
      violated(cert, "rev(a,a,c) + rev(b,b,c) differs from 2·rev(a,b,c) = " + to_string(twice));
  }
  if (!is_symmetric(cert.output)) violated(cert, "output menu is not symmetric");
  if (cert.output_revenue < cert.input_revenue) violated(cert, "output earns less than the input");
  return cert;
}

ThreeHalvesSplit three_halves_decomposition(const Menu& m) {
  require_two_items(m, "three_halves_decomposition");
  const Rational &p1 = m.a(), &p2 = m.b(), &p12 = m.c();
  if (p12 <= p1 + p2) throw ModelError("three_halves_decomposition needs a strictly supermodular menu, got " + m.to_string());
  const Rational p = 2 * p12 - p1 - p2;
  return {Menu::two(p1, p2, p1 + p2), Menu::two(p, p, p)};
}

Dominance verify_dominance(const std::vector<Menu>& candidates, const Menu& baseline, const JointDistribution& d) {
  if (candidates.empty()) throw ModelError("verify_dominance needs at least one candidate");
  Dominance out{candidates.front(), expected_revenue(candidates.front(), d), 0};
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    Rational r = expected_revenue(candidates[k], d);
    if (r > out.best_revenue) {
      out.best = candidates[k];
      out.best_revenue = std::move(r);
    }
  }
  out.margin = out.best_revenue - expected_revenue(baseline, d);
  return out;
}

Rational symmetric_average_defect(const Menu& m, const JointDistribution& d) {
  require_two_items(m, "symmetric_average_defect");
  const Menu work = m.a() > m.b() ? m.swapped() : m;
  const Rational a = work.a(), b = work.b(), c = work.c();
  return expected_revenue(Menu::two(a, a, c), d) + expected_revenue(Menu::two(b, b, c), d) -
         2 * expected_revenue(work, d);
}

}  // namespace bundlerev
