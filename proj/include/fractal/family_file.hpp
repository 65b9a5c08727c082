#pragma once

// Family file grammar:
//
//   file    := family ( "---" family )?
//   family  := header? code ( blank-line+ code )*
//   header  := "n=<int>" and/or "s=<int>" on one line
//   code    := row+           row := [01.]+    ('.' reads as '0')
//
// Lines whose first non-blank character is '#' are comments.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractal/gf2.hpp"
#include "fractal/subspace_family.hpp"

namespace fractal {

struct FamilyBlock {
  std::optional<std::size_t> declared_length;
  std::optional<std::size_t> declared_size;
  std::vector<BitMatrix> codes;
  /// 1-based line where the block starts.
  std::size_t line = 1;
};

/// Raw blocks; throws ParseError with line and column.
std::vector<FamilyBlock> parse_family_blocks(std::string_view text);

/// Families with headers checked and new_family preconditions enforced.
/// Errors are ParseError carrying the block's line.
std::vector<CodeFamily> parse_families(std::string_view text);

/// Single generator block for the distance command. The header may give n
/// so that an empty block denotes the zero code.
LinearCode parse_single_code(std::string_view text);

/// Writes a family in the same grammar, with a header and '0'/'1' rows.
std::string format_family(const CodeFamily& f);
std::string format_families(const CodeFamily& c, const CodeFamily& d);

/// Whole file as text; throws ParseError when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace fractal
