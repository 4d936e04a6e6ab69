#pragma once

#include "reembed/groebner.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace reembed {

/// An ideal file:
///
///   # comment
///   ring x, y, z
///   point 0, 0, 0      (optional, defaults to the origin)
///   ideal
///   x^2 - y
///   end
struct ProblemFile {
  RingPtr ring;
  Point point;
  std::vector<Polynomial> generators;

  Ideal ideal() const { return Ideal(ring, generators); }
};

/// Throws Error("parse_error") with the offending line number.
ProblemFile parse_problem(std::string_view text);
/// Throws Error("io_error") if the file cannot be read.
ProblemFile read_problem_file(const std::string& path);

/// Exit codes of cli_run.
enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kMath = 3, kCap = 4 };

/// Runs one subcommand; `args` excludes the program name. Reports go to
/// `out`, a single "error: <code>: <message>" line goes to `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reembed
