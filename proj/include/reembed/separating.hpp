#pragma once

#include "reembed/groebner.hpp"

#include <optional>
#include <vector>

namespace reembed {

/// X = Y u Z with Z = (z_1, ..., z_s) kept in the given order and Y ascending.
struct ZSplit {
  std::vector<std::size_t> z;
  VariableSet y;

  bool operator==(const ZSplit&) const = default;
};

/// Throws std::invalid_argument for an empty, repeated or out-of-range Z.
ZSplit make_split(const Ring& ring, std::vector<std::size_t> z);

/// {f_1, ..., f_s, g_1, ..., g_t}: f_i monic with leading term z_i, the g_j the
/// reduced basis of I n K[Y] (held in the subring K[Y]).
struct SeparatingGB {
  RingPtr ring;
  ZSplit split;
  TermOrdering ordering;
  std::vector<Polynomial> sep_part;
  MarkedGB image_part;
};

/// Checks the shape and wraps it. Throws std::invalid_argument if the tuple is
/// not coherently separating, if LT(f_i) != z_i under `ord`, or if some g_j
/// involves Z. The Groebner property itself is not re-verified.
SeparatingGB make_separating_gb(const RingPtr& ring, std::vector<std::size_t> z, const TermOrdering& ord,
                                std::vector<Polynomial> sep_part, std::span<const Polynomial> image_part);

/// z - f/c where c is the coefficient of z in f. Throws ZNotInLinearPartError
/// if z is not a term of f.
Polynomial tail(const Polynomial& f, std::size_t z);

bool is_z_separating(const Polynomial& f, std::size_t z);

/// Throws std::invalid_argument if the lengths differ.
bool is_coherently_separating(std::span<const Polynomial> fs, std::span<const std::size_t> z);

/// Reads a Z-separating basis off a reduced marked basis: succeeds iff every
/// z in Z is a marked leading term.
std::optional<SeparatingGB> separating_from_gb(const MarkedGB& gb, std::vector<std::size_t> z);

/// Uses the reduced basis under Elim(Z).
std::optional<SeparatingGB> find_z_separating_gb(const Ideal& ideal, std::vector<std::size_t> z);
/// Same, under a caller-chosen ordering (meaningful for Z-separating orderings).
std::optional<SeparatingGB> find_z_separating_gb(const Ideal& ideal, std::vector<std::size_t> z,
                                                 const TermOrdering& ord);

/// Replaces each tail by its normal form modulo the image part.
MarkedGB reduced_from_separating(const SeparatingGB& sgb);

/// P/I -> K[Y]/(I n K[Y]) given by z_i -> images[i] and y -> y.
struct Reembedding {
  RingPtr ring;
  ZSplit split;
  RingPtr image_ring;
  std::vector<Polynomial> images;
  Ideal image_ideal;

  /// The substitution homomorphism P -> K[Y].
  Polynomial forward(const Polynomial& f) const;
  /// The section K[Y] -> P, y -> y.
  Polynomial inverse(const Polynomial& h) const;
};

/// Throws NoSeparatingTupleError if Z admits no separating basis.
Reembedding build_reembedding(const Ideal& ideal, std::vector<std::size_t> z);
/// Uses the raw tails of the given basis. Checks that every generator of
/// `ideal` maps into the image ideal; throws std::logic_error otherwise.
Reembedding build_reembedding(const Ideal& ideal, const SeparatingGB& sgb);

/// Same split, same image ideal, and images agreeing modulo the image ideal.
bool same_map(const Reembedding& a, const Reembedding& b);

}  // namespace reembed
