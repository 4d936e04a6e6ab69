#include "reembed/monomial.hpp"

#include "reembed/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace reembed {

namespace {

Monomial::Exponent checked(unsigned e) {
  if (e > Monomial::kMaxExponent) throw std::overflow_error("exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  exps_.reserve(exps.size());
  for (auto e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial::Monomial(std::span<const unsigned> exps) {
  exps_.reserve(exps.size());
  for (auto e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t index, unsigned power) {
  Monomial m(n);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = checked(e);
}

std::size_t Monomial::as_variable() const noexcept {
  if (degree_ != 1) return exps_.size();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i]) return i;
  }
  return exps_.size();
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] && other.exps_[i]) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.exps_.size() != exps_.size()) throw std::invalid_argument("monomial length mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] = checked(unsigned(exps_[i]) + other.exps_[i]);
  }
  degree_ += other.degree_;
  return *this;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial q = a;
  for (std::size_t i = 0; i < q.exps_.size(); ++i) q.exps_[i] -= b.exps_[i];
  q.degree_ -= b.degree_;
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree_ = 0;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree_ = 0;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) {
    m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string(const Ring& ring) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace reembed
