#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gencheb/multipoly.hpp"

namespace gencheb {

/// Parses polynomial text over the given variables.
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | symbol ('^' uint)? | '(' expr ')' ('^' uint)?
///   rational := int ('/' uint)?
///
/// Whitespace is insignificant. The symbol `i` denotes the imaginary unit
/// unless `i` is itself one of `variables`. Throws ParseError (with the
/// byte offset) on malformed input or an unknown symbol.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// Canonical text form: terms in descending graded-lexicographic order
/// (total degree first, then exponents compared from the first variable),
/// explicit `*`, `^` for powers. parse_poly(render(p), p.variables()) == p.
std::string render(const MultiPoly& p);

}  // namespace gencheb
