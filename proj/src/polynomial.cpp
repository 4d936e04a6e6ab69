#include "reembed/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace reembed {

bool Point::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("polynomials live in different rings");
}

// Sorts descending by DegRevLex, merges duplicates, drops zeros.
void normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return degrevlex_compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  auto n = ring->size();
  return term(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->size();
  return term(std::move(ring), Monomial::variable(n, index), 1);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->size()) throw std::invalid_argument("term length does not match ring");
  std::vector<Term> terms;
  if (c != 0) terms.push_back({std::move(m), c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.size() != ring->size()) throw std::invalid_argument("term length does not match ring");
  }
  normalize(terms);
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return degrevlex_compare(t.monomial, key) > 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Rational Polynomial::evaluate(const Point& p) const {
  if (p.size() != ring_->size()) throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= p[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::homogeneous_component(unsigned degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::add_scaled(const Polynomial& other, const Rational& c) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      out.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      out.push_back({other.terms_[j].monomial, other.terms_[j].coeff * c});
      ++j;
      continue;
    }
    auto cmp = degrevlex_compare(terms_[i].monomial, other.terms_[j].monomial);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({other.terms_[j].monomial, other.terms_[j].coeff * c});
      ++j;
    } else {
      Rational sum = terms_[i].coeff + other.terms_[j].coeff * c;
      if (sum != 0) out.push_back({terms_[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = add_scaled(other, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = add_scaled(other, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  normalize(out);
  return Polynomial(a.ring_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a term preserves DegRevLex order.
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coeff * c});
  return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.monomial.to_string(*ring_);
    } else {
      out += mag.get_str() + '*' + t.monomial.to_string(*ring_);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial scale(const Polynomial& f, const Rational& c) { return f.scaled(c); }

Polynomial power(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.ring_ptr(), 1);
  Polynomial base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Monomial leading_term(const Polynomial& f, const TermOrdering& ord) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  auto terms = f.terms();
  const Monomial* best = &terms[0].monomial;
  for (const auto& t : terms.subspan(1)) {
    if (ord.greater(t.monomial, *best)) best = &t.monomial;
  }
  return *best;
}

Rational leading_coeff(const Polynomial& f, const TermOrdering& ord) {
  return f.coefficient(leading_term(f, ord));
}

Polynomial make_monic(const Polynomial& f, const TermOrdering& ord) {
  if (f.is_zero()) return f;
  return f.scaled(1 / leading_coeff(f, ord));
}

VariableSet indets(const Polynomial& f) {
  VariableSet out;
  for (std::size_t i = 0; i < f.ring().size(); ++i) {
    for (const auto& t : f.terms()) {
      if (t.monomial[i]) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images) {
  const auto n = f.ring().size();
  if (images.size() != n) throw std::invalid_argument("need one image per variable");
  for (const auto& img : images) {
    if (!same_ring(img.ring_ptr(), target)) throw std::invalid_argument("image ring mismatch");
  }
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto pow_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
      if (t.monomial[i]) prod *= pow_of(i, t.monomial[i]);
    }
    result += prod;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& images) {
  std::vector<Polynomial> all;
  all.reserve(f.ring().size());
  for (std::size_t i = 0; i < f.ring().size(); ++i) {
    auto it = images.find(i);
    all.push_back(it == images.end() ? Polynomial::variable(f.ring_ptr(), i) : it->second);
  }
  return substitute(f, f.ring_ptr(), all);
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map) {
  const auto n = f.ring().size();
  if (var_map.size() != n) throw std::invalid_argument("variable map length mismatch");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.monomial[i]) continue;
      if (var_map[i] >= target->size()) {
        throw std::invalid_argument("variable " + f.ring().name(i) + " has no image");
      }
      m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial embed_from_subring(const Polynomial& f, const RingPtr& full, const VariableSet& keep) {
  return map_variables(f, full, keep);
}

Polynomial restrict_to_subring(const Polynomial& f, const RingPtr& sub, const VariableSet& keep) {
  std::vector<std::size_t> map(f.ring().size(), sub->size());
  for (std::size_t j = 0; j < keep.size(); ++j) map[keep[j]] = j;
  return map_variables(f, sub, map);
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den = 1, num = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational factor(den, num);
  factor.canonicalize();
  return f.scaled(factor);
}

}  // namespace reembed
