#include "reembed/cli.hpp"

#include "reembed/errors.hpp"
#include "reembed/parser.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace reembed {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == s.npos ? s.npos : comma - start)));
    if (comma == s.npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error("parse_error", "line " + std::to_string(line) + ": " + message);
}

/// Splits "keyword rest" and returns rest if the keyword matches.
std::optional<std::string_view> after_keyword(std::string_view line, std::string_view keyword) {
  if (line.substr(0, keyword.size()) != keyword) return std::nullopt;
  auto rest = line.substr(keyword.size());
  if (!rest.empty() && !std::isspace(static_cast<unsigned char>(rest.front()))) return std::nullopt;
  return trim(rest);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto line = text.substr(start, nl == text.npos ? text.npos : nl - start);
    ++number;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) lines.emplace_back(number, line);
    if (nl == text.npos) break;
    start = nl + 1;
  }

  ProblemFile out;
  std::size_t k = 0;
  auto next_line = [&]() { return k < lines.size() ? lines[k].first : number; };

  if (k == lines.size()) fail(next_line(), "expected 'ring'");
  auto ring_decl = after_keyword(lines[k].second, "ring");
  if (!ring_decl || ring_decl->empty()) fail(next_line(), "expected 'ring <variables>'");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (auto name : split_commas(*ring_decl)) {
    if (!is_identifier(name)) fail(next_line(), "bad variable name '" + std::string(name) + "'");
    if (!seen.insert(std::string(name)).second) fail(next_line(), "variable '" + std::string(name) + "' repeated");
    names.emplace_back(name);
  }
  out.ring = make_ring(std::move(names));
  const std::size_t n = out.ring->size();
  out.point = Point::origin(n);
  ++k;

  if (k < lines.size()) {
    if (auto coords = after_keyword(lines[k].second, "point")) {
      auto items = split_commas(*coords);
      if (items.size() != n) fail(next_line(), "point needs " + std::to_string(n) + " coordinates");
      std::vector<Rational> values;
      for (auto item : items) {
        try {
          values.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
          fail(next_line(), "bad coordinate '" + std::string(item) + "'");
        }
      }
      out.point = Point(std::move(values));
      ++k;
    }
  }

  if (k == lines.size() || lines[k].second != "ideal") fail(next_line(), "expected 'ideal'");
  ++k;
  bool ended = false;
  for (; k < lines.size(); ++k) {
    if (lines[k].second == "end") {
      ended = true;
      ++k;
      break;
    }
    Polynomial f(out.ring);
    try {
      f = parse_polynomial(lines[k].second, out.ring);
    } catch (const Error& e) {
      fail(lines[k].first, e.what());
    }
    if (f.is_zero()) fail(lines[k].first, "generator is zero");
    out.generators.push_back(std::move(f));
  }
  if (!ended) fail(number, "expected 'end'");
  if (out.generators.empty()) fail(lines[k - 1].first, "the ideal has no generators");
  if (k < lines.size()) fail(lines[k].first, "text after 'end'");
  return out;
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace reembed
