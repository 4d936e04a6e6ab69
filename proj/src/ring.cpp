#include "reembed/ring.hpp"

#include "reembed/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace reembed {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(head) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) throw Error("bad_variable", "invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw Error("bad_variable", "duplicate variable '" + name + "'");
  }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Ring::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown_variable", "unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

RingPtr make_subring(const Ring& ring, const VariableSet& keep) {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (auto i : keep) names.push_back(ring.name(i));
  return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::size_t> parse_variable_list(const Ring& ring, std::string_view list) {
  std::vector<std::size_t> out;
  list = trim(list);
  if (list.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = list.find(',', start);
    auto item = trim(list.substr(start, comma == std::string_view::npos ? list.npos : comma - start));
    auto idx = ring.index(item);
    if (std::find(out.begin(), out.end(), idx) != out.end()) {
      throw Error("bad_variable", "variable '" + std::string(item) + "' listed twice");
    }
    out.push_back(idx);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

VariableSet parse_variable_set(const Ring& ring, std::string_view list) {
  auto out = parse_variable_list(ring, list);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_variables(const Ring& ring, const std::vector<std::size_t>& vars) {
  std::string out;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k) out += ", ";
    out += ring.name(vars[k]);
  }
  return out;
}

VariableSet complement(const Ring& ring, const VariableSet& vars) {
  VariableSet out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!std::binary_search(vars.begin(), vars.end(), i)) out.push_back(i);
  }
  return out;
}

}  // namespace reembed
