#pragma once

#include "reembed/groebner.hpp"

#include <vector>

namespace reembed {

/// A finite set of terms closed under division, listed in a chosen order.
class OrderIdeal {
 public:
  /// Throws std::invalid_argument if 1 is missing, a term repeats, or some
  /// divisor of a member is not a member.
  OrderIdeal(RingPtr ring, std::vector<Monomial> terms);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Position in the listed order, or size() if absent.
  std::size_t index(const Monomial& t) const;

 private:
  RingPtr ring_;
  std::vector<Monomial> terms_;
};

/// Parses a comma-separated list of terms such as "1, z, y, x".
OrderIdeal parse_order_ideal(const RingPtr& ring, std::string_view text);

/// The terms x_k * t outside O, ascending under DegRevLex.
std::vector<Monomial> border(const OrderIdeal& o);

struct BBSPresentation {
  /// Variables c{i}{j}, i over O in its listed order, j over the border,
  /// i-major; with more than nine of either the name is c{i}_{j}.
  RingPtr c_ring;
  std::vector<Monomial> border;
  /// Primitive integer generators with positive DegRevLex-leading coefficient,
  /// deduplicated, in order of first appearance.
  std::vector<Polynomial> generators;

  /// Index of c_{ij} for 1-based i and j.
  std::size_t c_index(std::size_t i, std::size_t j) const;
  Ideal ideal() const;
};

/// Entries of the commutators of the generic multiplication matrices.
BBSPresentation bbs_ideal(const OrderIdeal& o);

}  // namespace reembed
