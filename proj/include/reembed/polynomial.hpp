#pragma once

#include "reembed/monomial.hpp"
#include "reembed/ordering.hpp"
#include "reembed/rational.hpp"
#include "reembed/ring.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace reembed {

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

/// A point (a_1, ..., a_n) of K^n.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Point origin(std::size_t n) { return Point(std::vector<Rational>(n)); }

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_origin() const;

  bool operator==(const Point&) const = default;

 private:
  std::vector<Rational> coords_;
};

/// Sparse polynomial over Q. Terms are kept sorted descending under DegRevLex,
/// with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// -1 for the zero polynomial.
  int total_degree() const noexcept;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  Rational evaluate(const Point& p) const;
  /// Sum of the terms of the given total degree.
  Polynomial homogeneous_component(unsigned degree) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  /// Canonical printed form, e.g. "x^2 - 2*x*y + 1/2*z - 3".
  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  Polynomial add_scaled(const Polynomial& other, const Rational& c) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial scale(const Polynomial& f, const Rational& c);
Polynomial power(const Polynomial& f, unsigned e);

/// The ord-maximal support term. Throws std::invalid_argument for f = 0.
Monomial leading_term(const Polynomial& f, const TermOrdering& ord);
Rational leading_coeff(const Polynomial& f, const TermOrdering& ord);
/// f divided by its leading coefficient; 0 stays 0.
Polynomial make_monic(const Polynomial& f, const TermOrdering& ord);

/// Variables dividing at least one support term.
VariableSet indets(const Polynomial& f);

/// Ring homomorphism x_i -> images[i] into the ring of the images.
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images);
/// Same-ring substitution; variables without an entry map to themselves.
Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& images);

/// Renames variables: x_i -> target variable var_map[i]. Every variable of f
/// must have an entry (an index < target->size()); throws std::invalid_argument otherwise.
Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         std::span<const std::size_t> var_map);
/// Moves a polynomial of K[keep] (a subring of K[X]) back into K[X].
Polynomial embed_from_subring(const Polynomial& f, const RingPtr& full, const VariableSet& keep);
/// Moves a polynomial of K[X] whose indets lie in `keep` into the subring ring.
Polynomial restrict_to_subring(const Polynomial& f, const RingPtr& sub, const VariableSet& keep);

/// Multiplies by a positive rational so the coefficients are coprime integers.
Polynomial primitive_part(const Polynomial& f);

}  // namespace reembed
