#include "reembed/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace reembed {

std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("row length mismatch");
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next], rows[p]);
    Rational inv = 1 / rows[next][c];
    for (auto& v : rows[next]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[next][k];
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::size_t rank(Matrix rows, std::size_t cols) { return row_reduce(rows, cols).size(); }

Matrix kernel(Matrix rows, std::size_t cols) {
  auto pivots = row_reduce(rows, cols);
  Matrix out;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pi < pivots.size() && pivots[pi] == c) {
      ++pi;
      continue;
    }
    Vector v(cols);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace reembed
