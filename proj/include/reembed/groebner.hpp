#pragma once

#include "reembed/ordering.hpp"
#include "reembed/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace reembed {

/// A polynomial together with its designated leading term.
struct MarkedPolynomial {
  Monomial lead;
  Polynomial poly;

  bool operator==(const MarkedPolynomial&) const = default;
};

/// A reduced Groebner basis with each element's leading term marked.
///
/// Elements are monic, fully interreduced and listed in canonical order:
/// ascending DegRevLex on the marked leading terms. Two MarkedGBs are equal
/// iff their element lists are equal; the stored ordering only witnesses the
/// marking and is ignored by comparisons.
class MarkedGB {
 public:
  MarkedGB(RingPtr ring, TermOrdering ordering, std::vector<MarkedPolynomial> elements);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const TermOrdering& ordering() const noexcept { return ordering_; }
  const std::vector<MarkedPolynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  std::vector<Polynomial> polynomials() const;
  MarkedGB with_ordering(TermOrdering ordering) const;

  /// Canonical serialization; equal keys iff equal MarkedGBs.
  std::string key() const;
  /// "{(x, x + y), (y^2, y^2 - z)}"
  std::string to_string() const;

  bool operator==(const MarkedGB& other) const { return elements_ == other.elements_; }

 private:
  RingPtr ring_;
  TermOrdering ordering_;
  std::vector<MarkedPolynomial> elements_;
};

/// An ideal given by generators. The presentation is kept as given.
class Ideal {
 public:
  /// Throws std::invalid_argument if `generators` is empty or mixes rings.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  /// <0>, presented by the single generator 0.
  static Ideal zero(RingPtr ring);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_zero() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// Full reduction of f by G under G.ordering(): the largest reducible term is
/// always reduced first, by the first element (canonical order) whose marked
/// leading term divides it.
Polynomial normal_form(const Polynomial& f, const MarkedGB& gb);

/// The reduced marked Groebner basis of I under `ord`.
/// Throws UnitIdealError if 1 is in I. The zero ideal gives an empty basis.
MarkedGB buchberger(const Ideal& ideal, const TermOrdering& ord);
MarkedGB buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                    const TermOrdering& ord);

/// Turns a Groebner basis (not necessarily reduced) into the reduced marked one.
MarkedGB interreduce(const RingPtr& ring, std::span<const Polynomial> basis, const TermOrdering& ord);

/// Generators of I intersected with K[keep], as an ideal of that subring:
/// the Z-free elements of the reduced Elim(Z)-basis, Z the complement of keep.
Ideal intersect_with_subring(const Ideal& ideal, const VariableSet& keep);

/// NF of f against the reduced DegRevLex basis of I is zero.
bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// Checks the reduced-marked-basis invariants (monic, marked term dominant
/// under the stored ordering, interreduced, canonical order).
bool is_reduced_marked(const MarkedGB& gb);

}  // namespace reembed
