#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reembed {

/// Sorted, duplicate-free list of variable indices into a Ring.
using VariableSet = std::vector<std::size_t>;

/// The variable list of K[x_1, ..., x_n]. Exponent vectors index into it.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws Error("unknown_variable") when absent.
  std::size_t index(std::string_view name) const;

  bool operator==(const Ring& other) const = default;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// The polynomial ring in the variables `keep` (kept in ring order).
RingPtr make_subring(const Ring& ring, const VariableSet& keep);

bool same_ring(const RingPtr& a, const RingPtr& b);

bool is_identifier(std::string_view s);

/// Parses "y, z" into a VariableSet. Throws Error on unknown or repeated names.
VariableSet parse_variable_set(const Ring& ring, std::string_view list);
/// Keeps the order given in the list; used where Z = (z_1, ..., z_s) is ordered.
std::vector<std::size_t> parse_variable_list(const Ring& ring, std::string_view list);

std::string format_variables(const Ring& ring, const std::vector<std::size_t>& vars);

VariableSet complement(const Ring& ring, const VariableSet& vars);

}  // namespace reembed
