#include "tailor/utf8.hpp"

namespace tailor::utf8 {

namespace {
constexpr Codepoint kReplacement = 0xFFFD;
}

Codepoint decode(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    Codepoint cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + static_cast<std::size_t>(len) > s.size()) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
        cp > 0x10FFFF) {
        ++i;
        return kReplacement;
    }
    i += static_cast<std::size_t>(len);
    return cp;
}

void encode(Codepoint cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<Codepoint> decode_all(std::string_view s) {
    std::vector<Codepoint> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) cps.push_back(decode(s, i));
    return cps;
}

std::string encode_all(const std::vector<Codepoint>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (Codepoint cp : cps) encode(cp, out);
    return out;
}

std::size_t length(std::string_view s) {
    std::size_t i = 0, n = 0;
    while (i < s.size()) {
        decode(s, i);
        ++n;
    }
    return n;
}

bool is_combining_mark(Codepoint cp) {
    return (cp >= 0x0300 && cp <= 0x036F) ||  // combining diacritical marks
           (cp >= 0x064B && cp <= 0x065F) ||  // Arabic harakat
           cp == 0x0670 ||                    // Arabic superscript alef
           (cp >= 0x0591 && cp <= 0x05C7) ||  // Hebrew points
           (cp >= 0x1AB0 && cp <= 0x1AFF) || (cp >= 0x20D0 && cp <= 0x20FF);
}

bool is_word_char(Codepoint cp) {
    if (cp < 0x80)
        return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    if (is_combining_mark(cp)) return true;
    if (cp == 0x00D7 || cp == 0x00F7) return false;  // multiply, divide signs
    if (cp >= 0x00C0 && cp <= 0x024F) return true;   // Latin-1 + Ext A/B
    if (cp >= 0x0370 && cp <= 0x03FF)                // Greek
        return cp != 0x0387 && cp != 0x037E && cp != 0x0375;
    if (cp >= 0x0400 && cp <= 0x04FF) return true;  // Cyrillic
    if (cp >= 0x0531 && cp <= 0x0587) return true;  // Armenian
    if (cp >= 0x05D0 && cp <= 0x05F2) return true;  // Hebrew letters
    if (cp >= 0x0620 && cp <= 0x064A) return true;  // Arabic letters
    if (cp == 0x0640) return true;                  // tatweel (folded away)
    if (cp >= 0x066E && cp <= 0x06D3) return true;  // Arabic extended letters
    if (cp >= 0x10A0 && cp <= 0x10FF) return true;  // Georgian
    if (cp >= 0x1E00 && cp <= 0x1FFF) return true;  // Latin/Greek extended
    if (cp >= 0x3040 && cp <= 0x30FF) return true;  // kana
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true;  // CJK unified
    if (cp >= 0xAC00 && cp <= 0xD7A3) return true;  // Hangul
    return false;
}

Codepoint to_lower(Codepoint cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    if (cp >= 0x0100 && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178) return 0x00FF;
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2) return cp + 0x20;
    if (cp == 0x0386) return 0x03AC;
    if (cp >= 0x0388 && cp <= 0x038A) return cp + 0x25;
    if (cp == 0x038C) return 0x03CC;
    if (cp == 0x038E) return 0x03CD;
    if (cp == 0x038F) return 0x03CE;
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
    return cp;
}

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) encode(to_lower(decode(s, i)), out);
    return out;
}

namespace {

// Appends the folded form of the (already lowercased) codepoint, or nothing
// for pure combining marks. Returns false if the codepoint folds to itself.
bool fold_cp(Codepoint cp, std::string& out) {
    if (is_combining_mark(cp)) return true;  // dropped
    const char* s = nullptr;
    switch (cp) {
        case 0x00E0: case 0x00E1: case 0x00E2: case 0x00E3: case 0x00E4:
        case 0x00E5: case 0x0101: case 0x0103: case 0x0105: s = "a"; break;
        case 0x00E6: s = "ae"; break;
        case 0x00E7: case 0x0107: case 0x0109: case 0x010B: case 0x010D:
            s = "c"; break;
        case 0x010F: case 0x0111: s = "d"; break;
        case 0x00E8: case 0x00E9: case 0x00EA: case 0x00EB: case 0x0113:
        case 0x0115: case 0x0117: case 0x0119: case 0x011B: s = "e"; break;
        case 0x011D: case 0x011F: case 0x0121: case 0x0123: s = "g"; break;
        case 0x0125: case 0x0127: s = "h"; break;
        case 0x00EC: case 0x00ED: case 0x00EE: case 0x00EF: case 0x0129:
        case 0x012B: case 0x012D: case 0x012F: case 0x0131: s = "i"; break;
        case 0x0135: s = "j"; break;
        case 0x0137: s = "k"; break;
        case 0x013A: case 0x013C: case 0x013E: case 0x0140: case 0x0142:
            s = "l"; break;
        case 0x00F1: case 0x0144: case 0x0146: case 0x0148: case 0x0149:
            s = "n"; break;
        case 0x00F2: case 0x00F3: case 0x00F4: case 0x00F5: case 0x00F6:
        case 0x00F8: case 0x014D: case 0x014F: case 0x0151: s = "o"; break;
        case 0x0153: s = "oe"; break;
        case 0x0155: case 0x0157: case 0x0159: s = "r"; break;
        case 0x015B: case 0x015D: case 0x015F: case 0x0161: case 0x0219:
            s = "s"; break;
        case 0x00DF: s = "ss"; break;
        case 0x0163: case 0x0165: case 0x0167: case 0x021B: s = "t"; break;
        case 0x00F9: case 0x00FA: case 0x00FB: case 0x00FC: case 0x0169:
        case 0x016B: case 0x016D: case 0x016F: case 0x0171: case 0x0173:
            s = "u"; break;
        case 0x0175: s = "w"; break;
        case 0x00FD: case 0x00FF: case 0x0177: s = "y"; break;
        case 0x017A: case 0x017C: case 0x017E: s = "z"; break;
        case 0x00F0: s = "d"; break;   // eth
        case 0x00FE: s = "th"; break;  // thorn
        // Greek: strip tonos/dialytika.
        case 0x03AC: s = "α"; break;
        case 0x03AD: s = "ε"; break;
        case 0x03AE: s = "η"; break;
        case 0x03AF: case 0x03CA: case 0x0390: s = "ι"; break;
        case 0x03CC: s = "ο"; break;
        case 0x03CD: case 0x03CB: case 0x03B0: s = "υ"; break;
        case 0x03CE: s = "ω"; break;
        case 0x03C2: s = "σ"; break;  // final sigma
        // Arabic: normalize alef and ya variants, drop tatweel.
        case 0x0622: case 0x0623: case 0x0625: case 0x0671: s = "ا"; break;
        case 0x0649: s = "ي"; break;
        case 0x0640: s = ""; break;
        default:
            return false;
    }
    out += s;
    return true;
}

}  // namespace

std::string fold(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        Codepoint cp = to_lower(decode(s, i));
        if (!fold_cp(cp, out)) encode(cp, out);
    }
    return out;
}

}  // namespace tailor::utf8
