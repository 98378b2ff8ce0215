#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lad/world.hpp"

namespace lad {

// Context file format:
//
//   # comment
//   p q r          <- atom names, whitespace separated
//   101            <- one world per line, one 0/1 per atom in header order
//   010
//
// Columns are reordered into sorted atom order on load. Duplicate atoms,
// duplicate worlds and an empty world list are rejected with FormatError.
Context parse_context(std::string_view text);
Context load_context(const std::filesystem::path& path);

// Inverse of parse_context; worlds in ascending index order.
std::string format_context(const Context& c);

}  // namespace lad
