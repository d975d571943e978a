#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace opgraph {

// ASCII-only lowercase fold; non-ASCII bytes pass through unchanged.
std::string ascii_lower(std::string_view s);

// Digits with at most one interior decimal point ("7", "19.1").
bool is_pure_numeral(std::string_view s);

// Splits on runs of whitespace; never returns empty pieces.
std::vector<std::string_view> split_words(std::string_view s);

}  // namespace opgraph
