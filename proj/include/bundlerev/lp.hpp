#pragma once

#include <bundlerev/rational.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bundlerev::lp {

template <class T>
struct Sign;

template <>
struct Sign<Rational> {
  static bool positive(const Rational& x) { return sgn(x) > 0; }
  static bool negative(const Rational& x) { return sgn(x) < 0; }
};

template <>
struct Sign<double> {
  static constexpr double eps = 1e-11;
  static bool positive(double x) { return x > eps; }
  static bool negative(double x) { return x < -eps; }
};

enum class Status { optimal, unbounded, infeasible };

/// maximize c·z subject to rows a·z <= b and z >= 0, kept as a dictionary
///   z_B[r] = beta[r] - Σ_k alpha[r][k]·z_N[k],   objective = zeta + Σ_k gamma[k]·z_N[k].
/// Variables 0..n-1 are structural; the slack of row r is variable n + r.
/// Width stays n however many rows are added, so rows can be appended
/// lazily (cutting planes) and re-optimized with the dual simplex.
template <class T>
class Dictionary {
 public:
  explicit Dictionary(std::vector<T> objective) : n_(objective.size()), gamma_(std::move(objective)), zeta_(0) {
    for (std::size_t k = 0; k < n_; ++k) nonbasic_.push_back(k);
    where_.assign(n_, Where{false, 0});
    for (std::size_t k = 0; k < n_; ++k) where_[k].index = k;
  }

  std::size_t structural() const { return n_; }
  std::size_t rows() const { return basic_.size(); }
  std::size_t pivots() const { return pivots_; }

  /// Appends coefs·z <= rhs, rewritten in terms of the current nonbasic variables.
  void add_row(const std::vector<T>& coefs, const T& rhs) {
    if (coefs.size() != n_) throw std::invalid_argument("lp row width mismatch");
    std::vector<T> alpha(n_, T(0));
    T beta = rhs;
    for (std::size_t j = 0; j < n_; ++j) {
      if (coefs[j] == T(0)) continue;
      const Where w = where_[j];
      if (!w.basic) {
        alpha[w.index] += coefs[j];
      } else {
        beta -= coefs[j] * beta_[w.index];
        for (std::size_t k = 0; k < n_; ++k)
          if (alpha_[w.index][k] != T(0)) alpha[k] -= coefs[j] * alpha_[w.index][k];
      }
    }
    const std::size_t var = n_ + basic_.size();
    where_.push_back(Where{true, basic_.size()});
    basic_.push_back(var);
    beta_.push_back(std::move(beta));
    alpha_.push_back(std::move(alpha));
  }

  /// Primal simplex from a feasible dictionary, dual simplex from a dual
  /// feasible one. Largest-coefficient pricing switches to Bland's rule after
  /// a run of degenerate pivots, which rules out cycling.
  Status solve() {
    if (primal_feasible()) return primal();
    if (dual_feasible()) return dual();
    throw std::logic_error("lp dictionary is neither primal nor dual feasible");
  }

  bool primal_feasible() const {
    for (const auto& b : beta_)
      if (Sign<T>::negative(b)) return false;
    return true;
  }
  bool dual_feasible() const {
    for (const auto& g : gamma_)
      if (Sign<T>::positive(g)) return false;
    return true;
  }

  const T& objective() const { return zeta_; }

  /// Values of the structural variables at the current basis.
  std::vector<T> primal_values() const {
    std::vector<T> z(n_, T(0));
    for (std::size_t j = 0; j < n_; ++j)
      if (where_[j].basic) z[j] = beta_[where_[j].index];
    return z;
  }

  bool is_basic(std::size_t var) const { return where_[var].basic; }

 private:
  struct Where {
    bool basic;
    std::size_t index;  // row if basic, nonbasic column otherwise
  };

  static constexpr int kDegenerateStreak = 50;

  Status primal() {
    int streak = 0;
    for (;;) {
      const bool bland = streak > kDegenerateStreak;
      std::optional<std::size_t> enter;
      for (std::size_t k = 0; k < n_; ++k) {
        if (!Sign<T>::positive(gamma_[k])) continue;
        if (!enter || (bland ? nonbasic_[k] < nonbasic_[*enter] : gamma_[k] > gamma_[*enter])) enter = k;
      }
      if (!enter) return Status::optimal;
      std::optional<std::size_t> leave;
      T best_ratio(0);
      for (std::size_t r = 0; r < basic_.size(); ++r) {
        if (!Sign<T>::positive(alpha_[r][*enter])) continue;
        T ratio = beta_[r] / alpha_[r][*enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basic_[r] < basic_[*leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return Status::unbounded;
      streak = Sign<T>::positive(beta_[*leave]) ? 0 : streak + 1;
      pivot(*leave, *enter);
    }
  }

  Status dual() {
    int streak = 0;
    for (;;) {
      const bool bland = streak > kDegenerateStreak;
      std::optional<std::size_t> leave;
      for (std::size_t r = 0; r < basic_.size(); ++r) {
        if (!Sign<T>::negative(beta_[r])) continue;
        if (!leave || (bland ? basic_[r] < basic_[*leave] : beta_[r] < beta_[*leave])) leave = r;
      }
      if (!leave) return Status::optimal;
      std::optional<std::size_t> enter;
      T best_ratio(0);
      const auto& row = alpha_[*leave];
      for (std::size_t k = 0; k < n_; ++k) {
        if (!Sign<T>::negative(row[k])) continue;
        T ratio = gamma_[k] / row[k];
        if (!enter || ratio < best_ratio || (ratio == best_ratio && nonbasic_[k] < nonbasic_[*enter])) {
          enter = k;
          best_ratio = std::move(ratio);
        }
      }
      if (!enter) return Status::infeasible;
      streak = Sign<T>::negative(gamma_[*enter]) ? 0 : streak + 1;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    ++pivots_;
    auto& prow = alpha_[r];
    const T inv = T(1) / prow[j];
    beta_[r] *= inv;
    for (std::size_t k = 0; k < n_; ++k)
      if (k != j && prow[k] != T(0)) prow[k] *= inv;
    prow[j] = inv;

    for (std::size_t i = 0; i < basic_.size(); ++i) {
      if (i == r) continue;
      auto& row = alpha_[i];
      const T f = row[j];
      if (f == T(0)) continue;
      beta_[i] -= f * beta_[r];
      for (std::size_t k = 0; k < n_; ++k)
        if (k != j && prow[k] != T(0)) row[k] -= f * prow[k];
      row[j] = -f * prow[j];
    }
    const T g = gamma_[j];
    if (g != T(0)) {
      zeta_ += g * beta_[r];
      for (std::size_t k = 0; k < n_; ++k)
        if (k != j && prow[k] != T(0)) gamma_[k] -= g * prow[k];
      gamma_[j] = -g * prow[j];
    }

    const std::size_t entering = nonbasic_[j], leaving = basic_[r];
    basic_[r] = entering;
    nonbasic_[j] = leaving;
    where_[entering] = Where{true, r};
    where_[leaving] = Where{false, j};
  }

  std::size_t n_;
  std::vector<T> gamma_;
  T zeta_;
  std::vector<std::vector<T>> alpha_;
  std::vector<T> beta_;
  std::vector<std::size_t> basic_;     // variable of each row
  std::vector<std::size_t> nonbasic_;  // variable of each column
  std::vector<Where> where_;           // per variable
  std::size_t pivots_ = 0;
};

/// Solves the square system m·x = rhs exactly; nothing when m is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs);

}  // namespace bundlerev::lp
