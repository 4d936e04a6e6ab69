#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace reembed {

class Ring;

/// Exponent vector of a term x_1^e_1 ... x_n^e_n. The total degree is cached.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  static constexpr unsigned kMaxExponent = 0xFFFF;

  Monomial() = default;
  /// The term 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t n, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  /// If the term is a single variable x_i, returns i; otherwise size().
  std::size_t as_variable() const noexcept;

  /// this | other
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

  std::size_t hash() const noexcept;
  std::string to_string(const Ring& ring) const;

 private:
  boost::container::small_vector<Exponent, 12> exps_;
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic comparison (x_1 > x_2 > ... > x_n).
std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return degrevlex_compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace reembed
