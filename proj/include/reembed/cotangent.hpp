#pragma once

#include "reembed/groebner.hpp"
#include "reembed/linalg.hpp"
#include "reembed/polynomial.hpp"

#include <vector>

namespace reembed {

/// A K-subspace of linear forms vanishing at a point, kept in reduced row
/// echelon form with respect to the shifted variables (x_i - a_i).
class LinearSpace {
 public:
  LinearSpace(RingPtr ring, Point point, Matrix rows);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Point& point() const noexcept { return point_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  /// Echelon coefficient rows in the shifted coordinates.
  const Matrix& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// The basis as polynomials in the original variables.
  std::vector<Polynomial> basis() const;
  /// Variables with a nonzero coefficient in some basis element.
  VariableSet support() const;
  bool contains(const Polynomial& linear_form) const;

  bool operator==(const LinearSpace& other) const { return point_ == other.point_ && rows_ == other.rows_; }

 private:
  RingPtr ring_;
  Point point_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

/// f(y + a) written in the same variable names.
Polynomial shift_to_origin(const Polynomial& f, const Point& p);
/// Inverse of shift_to_origin.
Polynomial shift_from_origin(const Polynomial& f, const Point& p);

/// Degree-one component of the shifted f, shifted back. The constant is dropped.
Polynomial linear_part(const Polynomial& f, const Point& p);

/// Span of the generators' linear parts. Throws NotContainedInMaximalIdealError
/// if some generator does not vanish at p.
LinearSpace linear_part_ideal(const Ideal& ideal, const Point& p);

std::size_t cotangent_dim(const Ideal& ideal, const Point& p);

/// Kernel basis {v : l(p + v) = 0 for every l in Lin}; one vector per non-pivot variable.
Matrix tangent_space(const Ideal& ideal, const Point& p);

}  // namespace reembed
