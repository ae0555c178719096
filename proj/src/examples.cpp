#include "bundlerev/examples.hpp"

namespace bundlerev::examples {
namespace {

Rational q(const char* text) { return parse_rational(text); }

}  // namespace

SingleItemDistribution three_item_marginal() { return SingleItemDistribution::uniform({0, 1, 2, 2, 2, 2, 5, 6, 6, 6}); }

JointDistribution three_item_iid() {
  const auto f = three_item_marginal();
  return product({f, f, f});
}

std::vector<PublishedOptimum> three_item_optima() {
  return {
      {SearchConstraint::unrestricted, q("6293/1000"), Menu(3, {6, 6, 6, 7, 7, 8, 9})},
      {SearchConstraint::symmetric, q("6291/1000"), Menu(3, {6, 6, 6, 7, 7, 7, 9})},
      {SearchConstraint::submodular, q("6292/1000"), Menu(3, {5, 6, 6, 7, 7, 8, 9})},
      {SearchConstraint::symmetric_submodular, q("6288/1000"), Menu(3, {5, 5, 5, 7, 7, 7, 9})},
  };
}

JointDistribution supermodular_gap(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= Rational(1, 2)) throw ModelError("epsilon must lie in (0, 1/2)");
  const Rational half = Rational(1, 2) - eps, hi = 1 / eps;
  return JointDistribution(2, {{{4, 0}, half}, {{0, 4}, half}, {{hi, hi}, 2 * eps}});
}

JointDistribution asymmetry_gap(const Rational& eps) {
  if (sgn(eps) <= 0 || eps + eps * eps >= 1 || eps >= 1) throw ModelError("epsilon must lie in (0, 1) with ε + ε² < 1");
  const Rational top = 1 / (eps * eps), mid = 1 / eps;
  return JointDistribution(2, {{{top, top}, eps * eps},
                               {{mid, 0}, eps / 2},
                               {{0, mid}, eps / 2},
                               {{1, 1}, 1 - eps - eps * eps}});
}

Menu asymmetry_gap_menu(const Rational& eps) { return Menu::two(1, 1 / eps, 1 / (eps * eps)); }

SingleItemDistribution lottery_marginal() {
  return SingleItemDistribution({{10, q("2399/9000")},
                                 {13, q("1/9000")},
                                 {46, q("1/90")},
                                 {47, q("1/3")},
                                 {80, q("7/30")},
                                 {100, q("7/45")}});
}

JointDistribution lottery_types() {
  const auto f = lottery_marginal();
  return product({f, f});
}

RandomizedMenu lottery_menu() {
  auto e = [](const char* x1, const char* x2, const char* pay) { return LotteryEntry{{q(x1), q(x2)}, q(pay)}; };
  return RandomizedMenu(2, {
                               e("0", "0", "0"),
                               e("32/1187", "384/13057", "34240/13057"),
                               e("384/13057", "32/1187", "34240/13057"),
                               e("35/1187", "35/1187", "3258/1187"),
                               e("32/1187", "5647/5935", "90672/1187"),
                               e("5647/5935", "32/1187", "90672/1187"),
                               e("35/1187", "5647/5935", "90810/1187"),
                               e("5647/5935", "35/1187", "90810/1187"),
                               e("0", "1", "80"),
                               e("1", "0", "80"),
                               e("1", "1", "126"),
                           });
}

Valuation lottery_buyer() { return Valuation{46, 80}; }

Menu figure_supermodular() { return Menu::two(15, 45, 80); }
Menu figure_submodular() { return Menu::two(27, 70, 85); }

}  // namespace bundlerev::examples
