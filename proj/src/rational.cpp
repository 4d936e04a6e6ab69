#include "reembed/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace reembed {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits_ok(den)) throw std::invalid_argument("bad rational: " + std::string(text));
  }
  std::string_view body = num;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
  if (!digits_ok(body)) throw std::invalid_argument("bad rational: " + std::string(text));

  Integer n(std::string(body), 10);
  if (!num.empty() && num[0] == '-') n = -n;
  Integer d = 1;
  if (!den.empty()) {
    d = Integer(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace reembed
