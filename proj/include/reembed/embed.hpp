#pragma once

#include "reembed/cotangent.hpp"
#include "reembed/gfan.hpp"
#include "reembed/separating.hpp"

#include <optional>
#include <vector>

namespace reembed {

/// A closed integer interval; exact when lo == hi.
struct Bounds {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool exact() const noexcept { return lo == hi; }
  bool operator==(const Bounds&) const = default;
};

struct EmbeddingReport {
  std::size_t num_vars = 0;
  /// Lower bound for edim.
  std::size_t cot_dim = 0;
  std::size_t lin_dim = 0;
  /// Indeterminates occurring in the echelon basis of Lin.
  VariableSet candidates;
  /// Largest separable Z found, lowest in probing order; empty optional
  /// when the identity is the optimal separating re-embedding.
  std::optional<VariableSet> best_z;
  Bounds sepdim;
  Bounds edim;
  /// True when |best_z| = dim Lin, so edim = n - dim Lin is certified.
  bool certified = false;
  /// Re-embedding of the ideal translated so that the point is the origin.
  std::optional<Reembedding> reembedding;
  std::size_t probes = 0;
  /// Set when the fan was requested: its size, or nullopt if the cap was hit.
  std::optional<std::size_t> fan_size;
  bool fan_requested = false;
};

struct SearchOptions {
  bool use_fan = false;
  FanOptions fan;
  /// 1 runs the serial reference probing; more use the OpenMP probing.
  int threads = 1;
};

/// The ideal translated so that p becomes the origin.
Ideal centred_at(const Ideal& ideal, const Point& p);

/// True iff Z admits a separating basis and |Z| = dim Lin_p(I).
bool certify_optimal(const Ideal& ideal, const Point& p, std::vector<std::size_t> z);

/// The k-subsets of `candidates` in lexicographic order of variable indices.
std::vector<VariableSet> subsets_of_size(const VariableSet& candidates, std::size_t k);

struct ProbeHit {
  std::size_t index;
  SeparatingGB sgb;
};

/// The lowest-index subset admitting a separating basis.
std::optional<ProbeHit> probe_serial(const Ideal& ideal, const std::vector<VariableSet>& subsets);
std::optional<ProbeHit> probe_parallel(const Ideal& ideal, const std::vector<VariableSet>& subsets, int threads);

EmbeddingReport search_optimal_reembedding(const Ideal& ideal, const Point& p, const SearchOptions& options = {});

}  // namespace reembed
