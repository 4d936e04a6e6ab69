#pragma once

#include "reembed/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reembed {

using IntVector = std::vector<std::int64_t>;

/// A facet of a Groebner cone. `normal` points into the cone.
struct Facet {
  IntVector normal;
  /// A primitive integer point of the facet's relative interior.
  IntVector interior_point;
  bool on_orthant_boundary = false;

  bool operator==(const Facet&) const = default;
};

/// The closed cone {w >= 0 : d.w >= 0 for every inequality d} of weights
/// whose initial terms reproduce the marking of `gb`.
struct GroebnerCone {
  /// Carries the ordering WeightMatrix([witness]) with Lex tiebreak.
  MarkedGB gb;
  /// Primitive, deduplicated and irredundant (each one defines a facet).
  std::vector<IntVector> inequalities;
  /// A primitive integer vector in the interior.
  IntVector witness;

  bool contains(std::span<const std::int64_t> w) const;
};

/// Throws MarkingInconsistentError if no strictly positive weight realizes the marking.
GroebnerCone groebner_cone(const MarkedGB& gb);

/// Interior facets in inequality order, then orthant facets in variable order.
std::vector<Facet> facets(const GroebnerCone& cone);

/// The adjacent marked reduced basis across an interior facet of gb's cone.
/// Uses gb.ordering() for the lifting step, so gb must be reduced under it.
/// Throws FlipOnBoundaryError for facets on the orthant boundary.
MarkedGB flip(const MarkedGB& gb, const Facet& facet);

/// Variables that are marked leading terms.
VariableSet li_set(const MarkedGB& gb);

struct LIClass {
  VariableSet li;
  /// Indices into the fan's cone list, ascending; the first is the representative.
  std::vector<std::size_t> cones;
};

/// Groups cones by LI set, classes ordered by their first cone.
std::vector<LIClass> li_classes(const std::vector<GroebnerCone>& cones);

struct FanOptions {
  std::size_t cap = 10000;
  /// 1 runs the serial reference traversal; more use the OpenMP traversal.
  int threads = 1;
  /// Ordering of the starting basis; DegRevLex if unset.
  std::optional<TermOrdering> start;
};

/// Result of a possibly capped traversal, cones in breadth-first discovery order.
struct FanTraversal {
  std::vector<GroebnerCone> cones;
  bool complete = true;
};

FanTraversal traverse_gfan_serial(const Ideal& ideal, const FanOptions& options);
/// Level-synchronous; yields exactly the serial cone order.
FanTraversal traverse_gfan_parallel(const Ideal& ideal, const FanOptions& options);
FanTraversal traverse_gfan(const Ideal& ideal, const FanOptions& options);

struct GroebnerFan {
  std::vector<GroebnerCone> cones;
  std::vector<LIClass> classes;

  std::size_t size() const noexcept { return cones.size(); }
};

/// Throws CapExceededError when the fan has more than options.cap cones.
GroebnerFan enumerate_gfan(const Ideal& ideal, const FanOptions& options = {});

struct SepDim {
  std::size_t value;
  /// The first cone attaining the maximal number of leading indeterminates.
  MarkedGB witness;
};

SepDim sepdim(const GroebnerFan& fan);
SepDim sepdim(const Ideal& ideal, const FanOptions& options = {});

/// Classes whose LI set has maximal size.
std::vector<std::size_t> maximal_classes(const GroebnerFan& fan);

/// Classes with a nonempty LI set, i.e. those giving a Z-separating re-embedding.
std::vector<std::size_t> separating_classes(const GroebnerFan& fan);

/// One line per cone: "cone 1: li {y, z}; leads y, z, x^5; witness (1,3,4)".
std::string export_fan(const GroebnerFan& fan);

}  // namespace reembed
