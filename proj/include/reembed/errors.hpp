#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reembed {

/// Base of all library errors. `code()` is a stable snake_case reason tag.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse_error", "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Mathematical precondition failures (unit ideal, point not on the scheme, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

class UnitIdealError : public MathError {
 public:
  UnitIdealError() : MathError("unit_ideal", "the ideal contains 1") {}
};

class NotContainedInMaximalIdealError : public MathError {
 public:
  explicit NotContainedInMaximalIdealError(std::size_t generator)
      : MathError("not_contained_in_maximal_ideal",
                  "generator " + std::to_string(generator + 1) + " does not vanish at the point"),
        generator_(generator) {}

  /// Zero-based index of the offending generator.
  std::size_t generator() const noexcept { return generator_; }

 private:
  std::size_t generator_;
};

class ZNotInLinearPartError : public MathError {
 public:
  explicit ZNotInLinearPartError(const std::string& var)
      : MathError("z_not_in_linear_part", "variable " + var + " has no degree-1 term") {}
};

class NoSeparatingTupleError : public MathError {
 public:
  explicit NoSeparatingTupleError(const std::string& z)
      : MathError("no_separating_tuple", "no coherently separating tuple for {" + z + "}") {}
};

class MarkingInconsistentError : public MathError {
 public:
  MarkingInconsistentError()
      : MathError("marking_inconsistent", "no strictly positive weight realizes the marking") {}
};

class FlipOnBoundaryError : public MathError {
 public:
  FlipOnBoundaryError()
      : MathError("flip_on_boundary", "facet lies on the boundary of the orthant") {}
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(std::size_t cap)
      : Error("cap_exceeded", "Groebner fan exceeds the cone cap of " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace reembed
