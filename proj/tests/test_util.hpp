#pragma once

#include "reembed/groebner.hpp"
#include "reembed/parser.hpp"
#include "reembed/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace reembed::testing {

inline RingPtr ring_of(std::initializer_list<const char*> names) {
  std::vector<std::string> v;
  for (auto n : names) v.emplace_back(n);
  return make_ring(std::move(v));
}

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline Ideal ideal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto g : gens) v.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(v));
}

inline VariableSet vars(const RingPtr& ring, const std::string& list) { return parse_variable_set(*ring, list); }

/// Small random polynomials for property tests.
class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}

  Rational rational(int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 4);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(int range = 5) {
    Rational q;
    do q = rational(range);
    while (q == 0);
    return q;
  }

  Monomial monomial(std::size_t n, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg), var(0, static_cast<unsigned>(n - 1));
    Monomial m(n);
    for (unsigned k = deg(rng_); k-- > 0;) {
      auto i = var(rng_);
      m.set(i, m[i] + 1);
    }
    return m;
  }

  Polynomial polynomial(const RingPtr& ring, unsigned max_terms, unsigned max_deg) {
    std::uniform_int_distribution<unsigned> count(1, max_terms);
    std::vector<Term> terms;
    for (unsigned k = count(rng_); k-- > 0;) {
      terms.push_back({monomial(ring->size(), max_deg), nonzero_rational()});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  /// A polynomial vanishing at the origin (no constant term).
  Polynomial polynomial_in_origin_ideal(const RingPtr& ring, unsigned max_terms, unsigned max_deg) {
    auto f = polynomial(ring, max_terms, max_deg);
    return f - Polynomial::constant(ring, f.constant_term());
  }

  unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace reembed::testing
