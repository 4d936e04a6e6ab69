#pragma once

#include "reembed/monomial.hpp"
#include "reembed/rational.hpp"
#include "reembed/ring.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace reembed {

/// A global term ordering on the terms of an n-variable ring.
///
/// Variants:
///  - Lex and DegRevLex with x_1 > ... > x_n;
///  - Elim(Z): two blocks, the Z-block compared by DegRevLex first, then the
///    complement by DegRevLex. Every term involving Z exceeds every Z-free term;
///  - WeightMatrix: rows compared in turn, ties broken by Lex. Rational rows are
///    scaled to primitive integer rows; the first row must make the ordering
///    global (checked on construction).
class TermOrdering {
 public:
  enum class Kind { Lex, DegRevLex, Elim, WeightMatrix };

  static TermOrdering lex(std::size_t n);
  static TermOrdering degrevlex(std::size_t n);
  static TermOrdering elim(std::size_t n, const VariableSet& block);
  static TermOrdering weights(std::size_t n, const std::vector<std::vector<Rational>>& rows);
  static TermOrdering weights(std::size_t n, const std::vector<std::vector<std::int64_t>>& rows);

  Kind kind() const noexcept { return kind_; }
  std::size_t num_vars() const noexcept { return n_; }
  const VariableSet& block() const noexcept { return block_; }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

  /// Throws std::invalid_argument on a length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// The induced ordering on the subring in `keep`.
  TermOrdering restrict_to(const VariableSet& keep) const;

  /// "lex", "degrevlex", "elim(y,z)" or "weights(2,1;0,1)".
  std::string describe(const Ring& ring) const;

  bool operator==(const TermOrdering& other) const = default;

 private:
  TermOrdering(Kind kind, std::size_t n) : kind_(kind), n_(n) {}

  std::strong_ordering compare_elim(const Monomial& a, const Monomial& b) const noexcept;
  std::strong_ordering compare_weights(const Monomial& a, const Monomial& b) const noexcept;

  Kind kind_;
  std::size_t n_;
  VariableSet block_;
  std::vector<bool> in_block_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Parses "lex", "degrevlex", "elim:y,z" or "weights:2,1;1,0" (rows separated by ';').
TermOrdering parse_ordering(const Ring& ring, std::string_view spec);

/// Strict "greater" comparator bound to an ordering, for sorting terms descending.
struct OrderGreater {
  const TermOrdering* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
};

}  // namespace reembed
