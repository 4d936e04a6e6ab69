#pragma once

#include "reembed/rational.hpp"

#include <cstddef>
#include <vector>

namespace reembed {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form in place; zero rows are dropped.
/// Returns the pivot column of each remaining row (strictly increasing).
std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t cols);

std::size_t rank(Matrix rows, std::size_t cols);

/// Basis of {v : rows * v = 0}, one vector per free column in increasing order,
/// with a 1 in that free column.
Matrix kernel(Matrix rows, std::size_t cols);

}  // namespace reembed
