#pragma once

#include <string>
#include <string_view>

#include "ttlab/digraph.hpp"

namespace ttlab {

// Text form: "TDG <n> <s>", where <s> holds one digit per pair (i, j), i < j,
// in lexicographic order: 0 none, 1 i->j, 2 j->i, 3 both. For n <= 1 the
// string is empty and the trailing space is dropped.

std::string encode(const Digraph & g);

/// Throws ParseError carrying the offending character offset.
/// Surrounding whitespace (such as a trailing newline) is ignored.
Digraph decode(std::string_view text);

} // namespace ttlab
