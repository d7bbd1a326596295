#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "edr/core/ring.hpp"

namespace edr::detail {

/// Strips surrounding whitespace, advancing `at` past the leading part.
void trim(std::string_view& text, std::size_t& at);

/// Optional sign followed by decimal digits, surrounding whitespace allowed.
Integer parse_signed_integer(std::string_view text, std::size_t offset);

/// Splits on `sep` outside parentheses. Each piece carries its offset.
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text, char sep);

}  // namespace edr::detail
