#include "bundlerev/lp.hpp"

#include <utility>

namespace bundlerev::lp {

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  if (m.size() != n) throw std::invalid_argument("solve_square needs a square system");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t k = col; k < n; ++k) m[col][k] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = col; k < n; ++k)
        if (sgn(m[col][k]) != 0) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace bundlerev::lp
