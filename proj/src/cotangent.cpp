#include "reembed/cotangent.hpp"

#include "reembed/errors.hpp"

#include <map>
#include <stdexcept>

namespace reembed {

namespace {

void check_point(const Ring& ring, const Point& p) {
  if (p.size() != ring.size()) throw std::invalid_argument("point dimension does not match the ring");
}

Polynomial translate(const Polynomial& f, const Point& p, int sign) {
  check_point(f.ring(), p);
  if (p.is_origin()) return f;
  std::map<std::size_t, Polynomial> images;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    images.emplace(i, Polynomial::variable(f.ring_ptr(), i) + Polynomial::constant(f.ring_ptr(), sign * p[i]));
  }
  return substitute(f, images);
}

Vector linear_coefficients(const Polynomial& shifted) {
  const auto n = shifted.ring().size();
  Vector v(n);
  for (const auto& t : shifted.terms()) {
    if (auto i = t.monomial.as_variable(); i < n) v[i] = t.coeff;
  }
  return v;
}

}  // namespace

LinearSpace::LinearSpace(RingPtr ring, Point point, Matrix rows)
    : ring_(std::move(ring)), point_(std::move(point)), rows_(std::move(rows)) {
  check_point(*ring_, point_);
  pivots_ = row_reduce(rows_, ring_->size());
}

std::vector<Polynomial> LinearSpace::basis() const {
  std::vector<Polynomial> out;
  for (const auto& row : rows_) {
    std::vector<Term> terms;
    Rational c = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      terms.push_back({Monomial::variable(row.size(), i), row[i]});
      c -= row[i] * point_[i];
    }
    terms.push_back({Monomial(row.size()), c});
    out.push_back(Polynomial::from_terms(ring_, std::move(terms)));
  }
  return out;
}

VariableSet LinearSpace::support() const {
  VariableSet out;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    for (const auto& row : rows_) {
      if (row[i] != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool LinearSpace::contains(const Polynomial& linear_form) const {
  if (linear_form.total_degree() > 1) return false;
  if (linear_form.evaluate(point_) != 0) return false;
  auto rows = rows_;
  rows.push_back(linear_coefficients(linear_form));
  return rank(std::move(rows), ring_->size()) == dim();
}

Polynomial shift_to_origin(const Polynomial& f, const Point& p) { return translate(f, p, 1); }

Polynomial shift_from_origin(const Polynomial& f, const Point& p) { return translate(f, p, -1); }

Polynomial linear_part(const Polynomial& f, const Point& p) {
  auto g = shift_to_origin(f, p).homogeneous_component(1);
  return shift_from_origin(g, p);
}

LinearSpace linear_part_ideal(const Ideal& ideal, const Point& p) {
  check_point(ideal.ring(), p);
  Matrix rows;
  const auto& gens = ideal.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].evaluate(p) != 0) throw NotContainedInMaximalIdealError(k);
    rows.push_back(linear_coefficients(shift_to_origin(gens[k], p).homogeneous_component(1)));
  }
  return LinearSpace(ideal.ring_ptr(), p, std::move(rows));
}

std::size_t cotangent_dim(const Ideal& ideal, const Point& p) {
  return ideal.ring().size() - linear_part_ideal(ideal, p).dim();
}

Matrix tangent_space(const Ideal& ideal, const Point& p) {
  auto lin = linear_part_ideal(ideal, p);
  return kernel(lin.rows(), ideal.ring().size());
}

}  // namespace reembed
