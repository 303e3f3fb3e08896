#pragma once

// Polynomial expression grammar:
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' uint)?
//   atom   := integer | 'l' | var | '(' expr ')'
//   var    := 'x' | 'p'                 (m = 1)
//           | 'x1'..'xm' | 'p1'..'pm'   (any m)
//
// `l` is the deformation parameter. Division is allowed by nonzero scalars
// in Q(l) only, so `1/2`, `x/(2*l)` and `(2*l^2 + 1)/(2*l)` are valid.
// Whitespace is ignored. Errors are ParseError with a 0-based position.

#include "staralg/phasepoly.hpp"

#include <string_view>

namespace staralg {

PhasePolynomial parse_polynomial(std::string_view text, int m);
/// Throws ParseError when a p variable appears.
BasePolynomial parse_base_polynomial(std::string_view text, int m);
/// An expression in l alone.
RationalFunction parse_scalar(std::string_view text);
/// `3`, `-1/2`.
Rational parse_rational(std::string_view text);

} // namespace staralg
