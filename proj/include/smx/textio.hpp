#pragma once

#include <string>
#include <string_view>

#include "smx/union.hpp"

namespace smx {

// Reads the `.smx` text format:
//
//   [ 3 0 | 1 2
//     0 1 | 0 3
//     ----+----
//     1 1 | 5 2
//     0 0 | 2 -1 ]
//   U
//   [ 5 ]
//
// A component is bracketed; rows end at a newline or `;`; `|` between entries
// is a column cut; a line of only `-`/`+` (at least two dashes) is a row cut;
// a line holding only `U` (or the UTF-8 `∪`) separates components. Entries are
// integers or `p/q`. CRLF input is accepted.
//
// Throws ParseError with kind ParseError, RaggedRows, InconsistentCuts or
// EmptyInput; line and column are 1-based.
SuperNMatrix parse(std::string_view text);

// Canonical rendering: right-aligned columns, ` | ` at column cuts, an aligned
// dash/plus rule at row cuts, a lone `U` line between components, LF endings.
// parse(format(u)) is strict-equal to u.
std::string format(const SuperNMatrix& u);
std::string format(const SuperMatrix& s);

}  // namespace smx
