#pragma once

#include <string>
#include <string_view>

namespace tailor {

// One application of the original Porter algorithm (English).
std::string porter_stem_once(std::string_view word);

// Per-language stemming on a lowercased, diacritic-folded token. The result
// is a fixed point of the stemmer: stemming it again changes nothing. For
// languages without a stemmer (Occitan among them) the token is returned
// unchanged.
std::string stem(const std::string& lang, std::string_view token);

bool has_stemmer(const std::string& lang);

}  // namespace tailor
