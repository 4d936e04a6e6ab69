#pragma once

#include "reembed/polynomial.hpp"

#include <string_view>

namespace reembed {

/// Parses the polynomial grammar
///
///   poly   := term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' nat)?
///   coeff  := int ('/' nat)?
///
/// A leading sign on the first term is accepted so that printed polynomials
/// parse back. Whitespace is insignificant. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace reembed
