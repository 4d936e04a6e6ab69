#include "reembed/lp.hpp"

#include <stdexcept>

namespace reembed {

LPResult maximize(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("lp: column count mismatch");
    if (b[i] < 0) throw std::invalid_argument("lp: right-hand side must be non-negative");
  }
  // Tableau columns: n structural, m slack, then the right-hand side.
  const std::size_t cols = n + m;
  Matrix t(m, Vector(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the objective; obj[cols] holds -value.
  Vector obj(cols + 1);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];

  LPResult res;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) {
      res.bounded = false;
      return res;
    }
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) res.x[basis[i]] = t[i][cols];
  }
  res.value = -obj[cols];
  return res;
}

}  // namespace reembed
