#include "reembed/bbs.hpp"

#include "reembed/errors.hpp"
#include "reembed/parser.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace reembed {

OrderIdeal::OrderIdeal(RingPtr ring, std::vector<Monomial> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  const std::size_t n = ring_->size();
  std::set<Monomial, DegRevLexGreater> seen;
  for (const auto& t : terms_) {
    if (t.size() != n) throw std::invalid_argument("order ideal term has the wrong length");
    if (!seen.insert(t).second) throw std::invalid_argument("order ideal lists a term twice");
  }
  if (!seen.count(Monomial(n))) throw std::invalid_argument("order ideal must contain 1");
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      Monomial d = t;
      d.set(i, t[i] - 1);
      if (!seen.count(d)) {
        throw std::invalid_argument("order ideal is not closed under division: " + t.to_string(*ring_));
      }
    }
  }
}

std::size_t OrderIdeal::index(const Monomial& t) const {
  return static_cast<std::size_t>(std::find(terms_.begin(), terms_.end(), t) - terms_.begin());
}

OrderIdeal parse_order_ideal(const RingPtr& ring, std::string_view text) {
  std::vector<Monomial> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    auto f = parse_polynomial(item, ring);
    if (f.size() != 1 || f.terms()[0].coeff != 1) {
      throw Error("bad_order_ideal", "'" + std::string(item) + "' is not a term");
    }
    terms.push_back(f.terms()[0].monomial);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return OrderIdeal(ring, std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw Error("bad_order_ideal", e.what());
  }
}

std::vector<Monomial> border(const OrderIdeal& o) {
  std::set<Monomial, DegRevLexGreater> inside(o.terms().begin(), o.terms().end());
  std::vector<Monomial> out;
  for (const auto& t : o.terms()) {
    for (std::size_t k = 0; k < o.ring().size(); ++k) {
      Monomial m = t;
      m.set(k, t[k] + 1);
      if (!inside.count(m) && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) < 0; });
  return out;
}

std::size_t BBSPresentation::c_index(std::size_t i, std::size_t j) const {
  return (i - 1) * border.size() + (j - 1);
}

Ideal BBSPresentation::ideal() const {
  if (generators.empty()) return Ideal::zero(c_ring);
  return Ideal(c_ring, generators);
}

BBSPresentation bbs_ideal(const OrderIdeal& o) {
  BBSPresentation out;
  out.border = border(o);
  const std::size_t mu = o.size(), nu = out.border.size(), n = o.ring().size();
  const bool wide = mu > 9 || nu > 9;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= mu; ++i) {
    for (std::size_t j = 1; j <= nu; ++j) {
      names.push_back("c" + std::to_string(i) + (wide ? "_" : "") + std::to_string(j));
    }
  }
  out.c_ring = make_ring(std::move(names));
  const auto& cr = out.c_ring;

  using Matrix = std::vector<std::vector<Polynomial>>;
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix a(mu, std::vector<Polynomial>(mu, Polynomial(cr)));
    for (std::size_t col = 0; col < mu; ++col) {
      Monomial m = o.terms()[col];
      m.set(k, m[k] + 1);
      auto pos = o.index(m);
      if (pos < mu) {
        a[pos][col] = Polynomial::constant(cr, 1);
        continue;
      }
      auto j = static_cast<std::size_t>(std::find(out.border.begin(), out.border.end(), m) - out.border.begin());
      for (std::size_t row = 0; row < mu; ++row) a[row][col] = Polynomial::variable(cr, out.c_index(row + 1, j + 1));
    }
    mats.push_back(std::move(a));
  }

  std::set<std::string> seen;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      for (std::size_t r = 0; r < mu; ++r) {
        for (std::size_t c = 0; c < mu; ++c) {
          Polynomial entry(cr);
          for (std::size_t s = 0; s < mu; ++s) {
            entry += mats[k][r][s] * mats[l][s][c];
            entry -= mats[l][r][s] * mats[k][s][c];
          }
          if (entry.is_zero()) continue;
          entry = primitive_part(entry);
          if (entry.terms()[0].coeff < 0) entry = -entry;
          if (seen.insert(entry.to_string()).second) out.generators.push_back(std::move(entry));
        }
      }
    }
  }
  return out;
}

}  // namespace reembed
