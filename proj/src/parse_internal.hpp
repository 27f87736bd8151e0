#pragma once

#include <string>

#include "lexer.hpp"
#include "pi/comb.hpp"
#include "pi/syntax.hpp"

namespace pi::detail {

/// One combinator expression, stopping at the first token that cannot
/// continue it.
Comb parse_expression(Cursor& in, const NameTable& scope);

/// `def NAME = comb`, with the leading `def` already consumed. Adds the
/// definition to `scope`.
Definition parse_definition(Cursor& in, NameTable& scope);

}  // namespace pi::detail
