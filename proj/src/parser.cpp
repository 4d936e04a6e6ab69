#include "reembed/parser.hpp"

#include "reembed/errors.hpp"

#include <cctype>

namespace reembed {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    terms.push_back(parse_term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      get();
      terms.push_back(parse_term(op == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    skip_ws();
    Rational coeff = 1;
    Monomial mono(ring_->size());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      skip_ws();
      while (peek() == '*') {
        get();
        parse_factor(mono);
        skip_ws();
      }
    } else {
      parse_factor(mono);
      skip_ws();
      while (peek() == '*') {
        get();
        parse_factor(mono);
        skip_ws();
      }
    }
    if (negative) coeff = -coeff;
    return {std::move(mono), std::move(coeff)};
  }

  Rational parse_coeff() {
    Integer num = parse_nat("integer");
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      auto at = pos_;
      den = parse_nat("denominator");
      if (den == 0) fail_at(at, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Integer parse_nat(const char* what) {
    skip_ws();
    auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    auto start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a variable");
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    auto name = text_.substr(start, pos_ - start);
    auto idx = ring_->find(name);
    if (!idx) fail_at(start, "unknown variable '" + std::string(name) + "'");
    unsigned long exp = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      auto at = pos_;
      Integer e = parse_nat("exponent");
      if (e > Monomial::kMaxExponent) fail_at(at, "exponent overflow");
      exp = e.get_ui();
    }
    unsigned long total = mono[*idx] + exp;
    if (total > Monomial::kMaxExponent) fail_at(start, "exponent overflow");
    mono.set(*idx, static_cast<unsigned>(total));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace reembed
