#pragma once

#include <string>
#include <vector>

#include "cayley/raw_table.hpp"

namespace cayley {

/// Classic nested-list table layout, one row per line:
///   ((1 2 4 ...)
///    (2 4 8 ...))
std::string render_table(const RawTable& t);

/// Whitespace-insensitive token stream of a rendered table: parens and atoms.
std::vector<std::string> table_tokens(const std::string& rendered);

} // namespace cayley
