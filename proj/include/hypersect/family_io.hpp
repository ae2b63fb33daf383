#pragma once

// Plain-text family files:
//
//   # optional comment lines
//   vars: x, y, z; param_dim: 1
//   0 : z^2 - x
//   1 : z^2 - x - y
//
// The header is the first non-comment line. Tags are trimmed and may not contain ':'.

#include "hypersect/synthesizer.hpp"

#include <string>
#include <string_view>

namespace hypersect {

/// Throws ParseError whose position is the byte offset into `text`.
FamilySample parse_family(std::string_view text);

/// Header plus one line per member; `comments` lines are emitted first, each prefixed by "# ".
std::string format_family(const FamilySample& family, const std::vector<std::string>& comments = {});

}  // namespace hypersect
