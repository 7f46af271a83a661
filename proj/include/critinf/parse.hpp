#ifndef CRITINF_PARSE_HPP
#define CRITINF_PARSE_HPP

#include <string>

#include "critinf/polynomial.hpp"

namespace critinf {

/// Parses the polynomial grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)?
///   base   := rational | identifier | '(' expr ')'
///   rational := natural ('/' natural)?
/// Identifiers must be ring variables or the field parameter; whitespace is
/// insignificant; there is no implicit multiplication.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

/// Univariate rational-coefficient parse (for --minpoly): the only allowed
/// identifier is `param`.
QPoly parse_qpoly(const std::string& text, const std::string& param);

}  // namespace critinf

#endif
