#include "reembed/ordering.hpp"

#include "reembed/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace reembed {

namespace {

__extension__ using Int128 = __int128;

void check_len(const TermOrdering& ord, const Monomial& a, const Monomial& b) {
  if (a.size() != ord.num_vars() || b.size() != ord.num_vars()) {
    throw std::invalid_argument("term length does not match the ordering");
  }
}

std::vector<std::int64_t> primitive_row(const std::vector<Rational>& row) {
  Integer den = 1;
  for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& q : row) {
    Integer v = q.get_num() * (den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  std::vector<std::int64_t> out;
  for (auto& v : ints) {
    if (g != 0) v /= g;
    // Keeps dot products with 16-bit exponents well inside 128 bits.
    if (!v.fits_slong_p() || abs(v) > Integer("140737488355328")) {
      throw std::overflow_error("weight entry too large");
    }
    out.push_back(v.get_si());
  }
  return out;
}

}  // namespace

TermOrdering TermOrdering::lex(std::size_t n) { return TermOrdering(Kind::Lex, n); }

TermOrdering TermOrdering::degrevlex(std::size_t n) { return TermOrdering(Kind::DegRevLex, n); }

TermOrdering TermOrdering::elim(std::size_t n, const VariableSet& block) {
  TermOrdering ord(Kind::Elim, n);
  ord.block_ = block;
  std::sort(ord.block_.begin(), ord.block_.end());
  ord.block_.erase(std::unique(ord.block_.begin(), ord.block_.end()), ord.block_.end());
  ord.in_block_.assign(n, false);
  for (auto i : ord.block_) {
    if (i >= n) throw std::invalid_argument("elimination block index out of range");
    ord.in_block_[i] = true;
  }
  return ord;
}

TermOrdering TermOrdering::weights(std::size_t n, const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<std::int64_t>> ints;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("weight row length mismatch");
    ints.push_back(primitive_row(row));
  }
  return weights(n, ints);
}

TermOrdering TermOrdering::weights(std::size_t n,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  TermOrdering ord(Kind::WeightMatrix, n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("weight row length mismatch");
    if (std::all_of(row.begin(), row.end(), [](auto v) { return v == 0; })) continue;
    ord.rows_.push_back(row);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& row : ord.rows_) {
      if (row[i] < 0) throw std::invalid_argument("weight matrix does not define a global ordering");
      if (row[i] > 0) break;
    }
  }
  return ord;
}

std::strong_ordering TermOrdering::compare(const Monomial& a, const Monomial& b) const {
  check_len(*this, a, b);
  switch (kind_) {
    case Kind::DegRevLex:
      return degrevlex_compare(a, b);
    case Kind::Lex:
      for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::Elim:
      return compare_elim(a, b);
    case Kind::WeightMatrix:
      return compare_weights(a, b);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrdering::compare_elim(const Monomial& a, const Monomial& b) const noexcept {
  unsigned da = 0, db = 0;
  for (auto i : block_) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = block_.size(); k-- > 0;) {
    auto i = block_[k];
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  unsigned ra = a.degree() - da, rb = b.degree() - db;
  if (ra != rb) return ra <=> rb;
  for (std::size_t i = n_; i-- > 0;) {
    if (in_block_[i]) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrdering::compare_weights(const Monomial& a,
                                                   const Monomial& b) const noexcept {
  for (const auto& row : rows_) {
    Int128 diff = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      diff += static_cast<Int128>(row[i]) * (static_cast<int>(a[i]) - static_cast<int>(b[i]));
    }
    if (diff != 0) return diff <=> static_cast<Int128>(0);
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

TermOrdering TermOrdering::restrict_to(const VariableSet& keep) const {
  const std::size_t k = keep.size();
  switch (kind_) {
    case Kind::Lex:
      return lex(k);
    case Kind::DegRevLex:
      return degrevlex(k);
    case Kind::Elim: {
      VariableSet sub;
      for (std::size_t j = 0; j < k; ++j) {
        if (in_block_[keep[j]]) sub.push_back(j);
      }
      return sub.empty() ? degrevlex(k) : elim(k, sub);
    }
    case Kind::WeightMatrix: {
      std::vector<std::vector<Rational>> rows;
      for (const auto& row : rows_) {
        std::vector<Rational> r;
        for (auto i : keep) r.emplace_back(row[i]);
        rows.push_back(std::move(r));
      }
      std::vector<std::vector<std::int64_t>> ints;
      for (const auto& r : rows) {
        if (std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; })) continue;
        ints.push_back(primitive_row(r));
      }
      return weights(k, ints);
    }
  }
  return degrevlex(k);
}

std::string TermOrdering::describe(const Ring& ring) const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Elim: {
      std::string out = "elim(";
      for (std::size_t k = 0; k < block_.size(); ++k) {
        if (k) out += ',';
        out += ring.name(block_[k]);
      }
      return out + ")";
    }
    case Kind::WeightMatrix: {
      std::string out = "weights(";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += ';';
        for (std::size_t i = 0; i < n_; ++i) {
          if (i) out += ',';
          out += std::to_string(rows_[r][i]);
        }
      }
      return out + ")";
    }
  }
  return {};
}

TermOrdering parse_ordering(const Ring& ring, std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const auto n = ring.size();
  if (head == "lex" && rest.empty()) return TermOrdering::lex(n);
  if (head == "degrevlex" && rest.empty()) return TermOrdering::degrevlex(n);
  if (head == "elim") return TermOrdering::elim(n, parse_variable_set(ring, rest));
  if (head == "weights") {
    std::vector<std::vector<Rational>> rows;
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto semi = rest.find(';', start);
      auto row_text = rest.substr(start, semi == std::string_view::npos ? rest.npos : semi - start);
      std::vector<Rational> row;
      std::size_t s = 0;
      while (s <= row_text.size()) {
        auto comma = row_text.find(',', s);
        auto item = row_text.substr(s, comma == std::string_view::npos ? row_text.npos : comma - s);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        try {
          row.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
          throw Error("bad_ordering", "bad weight entry '" + std::string(item) + "'");
        }
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
      if (row.size() != n) throw Error("bad_ordering", "weight row needs " + std::to_string(n) + " entries");
      rows.push_back(std::move(row));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    try {
      return TermOrdering::weights(n, rows);
    } catch (const std::invalid_argument& e) {
      throw Error("bad_ordering", e.what());
    }
  }
  throw Error("bad_ordering", "unknown ordering '" + std::string(spec) + "'");
}

}  // namespace reembed
