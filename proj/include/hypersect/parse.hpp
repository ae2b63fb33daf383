#pragma once

#include "hypersect/multipoly.hpp"

#include <string_view>

namespace hypersect {

/// Parses an expression over `vars`.
///
/// Grammar: integers, rationals "a/b", identifiers, + - * ^ and parentheses;
/// "^" takes a nonnegative integer literal. Throws ParseError with the byte offset.
MultiPoly parse_poly(std::string_view text, const VarList& vars);

/// Splits "x,y,z" into names; throws ParseError on empty or duplicate names.
VarList parse_var_list(std::string_view text);

}  // namespace hypersect
