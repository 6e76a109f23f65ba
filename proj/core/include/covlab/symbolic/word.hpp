#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covlab {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

/// Largest alphabet whose symbols print as single base-36 digits.
inline constexpr int kMaxAlphabet = 36;

/// Renders symbols as base-36 digits, so "0110" for the word 0,1,1,0.
std::string format_word(std::span<const Symbol> w);

/// Inverse of format_word. Throws InputError on characters outside [0, alphabet).
Word parse_word(std::string_view text, int alphabet);

}  // namespace covlab
