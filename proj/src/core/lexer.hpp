#pragma once

#include <string_view>
#include <vector>

#include "core/cst.hpp"

namespace psiminer {

bool is_valid_utf8(std::string_view bytes);

// Splits source into tokens whose texts concatenate back to `source`.
// Throws LexError on unterminated strings, chars, block comments, or on a
// character that starts no token.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace psiminer
