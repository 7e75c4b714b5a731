#pragma once

#include <string_view>

#include "pprod/poly.hpp"
#include "pprod/term.hpp"

namespace pprod {

// Shared ASCII expression grammar:
//   expr   := term ('+' term | '-' term)*
//   term   := factor ('*' factor)*
//   factor := rational | ident ('^' k)? | '(' expr ')' | '-' factor
//   rational := integer ('/' positive-integer)?
//   ident  := [A-Za-z_][A-Za-z0-9_.]*
// '*' is mandatory; juxtaposition is an error. Errors raise ParseError.

/// Parses into Q[X]; constants are allowed.
Poly parse_poly(std::string_view text);

/// Parses into a free term, keeping the source structure. Rational factors of a
/// product become the scalar of a Scale node; u - v is u + (-1)·v; ident^k is a
/// left-nested product of k copies. A nonzero constant has no term denotation.
Term parse_term(std::string_view text);

bool is_identifier(std::string_view text);

}  // namespace pprod
