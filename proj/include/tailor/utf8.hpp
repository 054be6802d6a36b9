#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tailor::utf8 {

using Codepoint = std::uint32_t;

// Decodes the codepoint starting at byte `i`, advancing `i` past it.
// Invalid sequences yield U+FFFD and advance one byte.
Codepoint decode(std::string_view s, std::size_t& i);

void encode(Codepoint cp, std::string& out);

std::vector<Codepoint> decode_all(std::string_view s);
std::string encode_all(const std::vector<Codepoint>& cps);

std::size_t length(std::string_view s);

// True for codepoints that may form part of a word token: letters of the
// scripts this toolkit handles plus combining marks (which the diacritic
// fold later removes). Digits, punctuation, symbols and whitespace are
// token separators.
bool is_word_char(Codepoint cp);

bool is_combining_mark(Codepoint cp);

Codepoint to_lower(Codepoint cp);
std::string to_lower(std::string_view s);

// Lowercases and removes diacritics: precomposed Latin letters map to their
// base letters, combining marks are dropped, Greek tonos/dialytika are
// stripped, Arabic harakat are removed and alef/ya variants normalized.
// Some folds expand (ae, ss), so the result is a string.
std::string fold(std::string_view s);

}  // namespace tailor::utf8
