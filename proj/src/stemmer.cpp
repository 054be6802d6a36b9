#include "tailor/stemmer.hpp"

#include <array>
#include <cstring>
#include <unordered_set>
#include <vector>

#include "tailor/utf8.hpp"

namespace tailor {

namespace {

// ---------------------------------------------------------------------------
// Porter stemmer (original algorithm, following the reference implementation
// including its two step-2 adjustments: bli->ble and logi->log).
// ---------------------------------------------------------------------------

bool is_cons(const std::string& w, std::size_t i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_cons(w, i - 1);
        default:
            return true;
    }
}

// Number of VC sequences in w[0, len).
int measure(const std::string& w, std::size_t len) {
    int n = 0;
    std::size_t i = 0;
    while (true) {
        if (i >= len) return n;
        if (!is_cons(w, i)) break;
        ++i;
    }
    ++i;
    while (true) {
        while (true) {
            if (i >= len) return n;
            if (is_cons(w, i)) break;
            ++i;
        }
        ++i;
        ++n;
        while (true) {
            if (i >= len) return n;
            if (!is_cons(w, i)) break;
            ++i;
        }
        ++i;
    }
}

bool has_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_cons(w, i)) return true;
    return false;
}

bool double_cons(const std::string& w, std::size_t len) {
    return len >= 2 && w[len - 1] == w[len - 2] && is_cons(w, len - 1);
}

// cvc pattern at positions len-3..len-1, final consonant not w/x/y.
bool cvc(const std::string& w, std::size_t len) {
    if (len < 3 || !is_cons(w, len - 3) || is_cons(w, len - 2) ||
        !is_cons(w, len - 1))
        return false;
    char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends(const std::string& w, const char* s) {
    std::size_t n = std::strlen(s);
    return w.size() >= n && w.compare(w.size() - n, n, s) == 0;
}

void set_suffix(std::string& w, std::size_t stem_len, const char* s) {
    w.resize(stem_len);
    w += s;
}

struct Rule {
    const char* suffix;
    const char* replacement;
};

// Applies the first matching rule; replaces only when m(stem) > 0.
void map_suffix(std::string& w, const Rule* rules, std::size_t count) {
    for (std::size_t r = 0; r < count; ++r) {
        if (ends(w, rules[r].suffix)) {
            std::size_t stem_len = w.size() - std::strlen(rules[r].suffix);
            if (measure(w, stem_len) > 0)
                set_suffix(w, stem_len, rules[r].replacement);
            return;
        }
    }
}

void porter_step1ab(std::string& w) {
    if (w.back() == 's') {
        if (ends(w, "sses"))
            w.resize(w.size() - 2);
        else if (ends(w, "ies"))
            set_suffix(w, w.size() - 3, "i");
        else if (w[w.size() - 2] != 's')
            w.resize(w.size() - 1);
    }
    if (ends(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    } else {
        std::size_t stem_len = 0;
        if (ends(w, "ed") && has_vowel(w, w.size() - 2))
            stem_len = w.size() - 2;
        else if (ends(w, "ing") && has_vowel(w, w.size() - 3))
            stem_len = w.size() - 3;
        else
            return;
        w.resize(stem_len);
        if (ends(w, "at") || ends(w, "bl") || ends(w, "iz")) {
            w += 'e';
        } else if (double_cons(w, w.size())) {
            char c = w.back();
            if (c != 'l' && c != 's' && c != 'z') w.resize(w.size() - 1);
        } else if (measure(w, w.size()) == 1 && cvc(w, w.size())) {
            w += 'e';
        }
    }
}

void porter_step1c(std::string& w) {
    if (w.back() == 'y' && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

void porter_step2(std::string& w) {
    static const Rule rules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
        {"anci", "ance"},   {"izer", "ize"},    {"bli", "ble"},
        {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
        {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
        {"iviti", "ive"},   {"biliti", "ble"},  {"logi", "log"},
    };
    map_suffix(w, rules, std::size(rules));
}

void porter_step3(std::string& w) {
    static const Rule rules[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    };
    map_suffix(w, rules, std::size(rules));
}

void porter_step4(std::string& w) {
    static const char* suffixes[] = {
        "al", "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou",  "ism", "ate",  "iti",  "ous", "ive",
        "ize",
    };
    for (const char* s : suffixes) {
        if (!ends(w, s)) continue;
        std::size_t stem_len = w.size() - std::strlen(s);
        if (std::strcmp(s, "ion") == 0) {
            if (stem_len == 0 ||
                (w[stem_len - 1] != 's' && w[stem_len - 1] != 't'))
                continue;
        }
        if (measure(w, stem_len) > 1) w.resize(stem_len);
        return;
    }
}

void porter_step5(std::string& w) {
    if (w.back() == 'e') {
        int m = measure(w, w.size());
        if (m > 1 || (m == 1 && !cvc(w, w.size() - 1)))
            w.resize(w.size() - 1);
    }
    if (w.back() == 'l' && double_cons(w, w.size()) &&
        measure(w, w.size()) > 1)
        w.resize(w.size() - 1);
}

// ---------------------------------------------------------------------------
// Light suffix strippers for the non-English editions. These are modest
// plural/derivation removers in the style of published "light" stemmers,
// not full Snowball ports; each strips at most one prefix and one suffix
// per application and guards a minimum remaining stem length.
// ---------------------------------------------------------------------------

struct SuffixRule {
    const char* suffix;
    const char* replacement;
    std::size_t min_stem;  // codepoints that must remain before the suffix
};

bool apply_suffix_rules(std::string& w, const SuffixRule* rules,
                        std::size_t count) {
    std::size_t len = utf8::length(w);
    for (std::size_t r = 0; r < count; ++r) {
        const char* s = rules[r].suffix;
        std::size_t n = std::strlen(s);
        if (w.size() <= n || w.compare(w.size() - n, n, s) != 0) continue;
        std::size_t suffix_cps = utf8::length(s);
        if (len < suffix_cps + rules[r].min_stem) continue;
        w.resize(w.size() - n);
        w += rules[r].replacement;
        return true;
    }
    return false;
}

void stem_french(std::string& w) {
    static const SuffixRule derivational[] = {
        {"issements", "", 3}, {"issement", "", 3}, {"atrices", "", 3},
        {"atrice", "", 3},    {"ateurs", "", 3},   {"ateur", "", 3},
        {"logies", "log", 2}, {"logie", "log", 2}, {"ements", "", 3},
        {"ement", "", 3},     {"euses", "eu", 2},  {"euse", "eu", 2},
        {"ances", "anc", 2},  {"ance", "anc", 2},  {"ences", "enc", 2},
        {"ence", "enc", 2},   {"ments", "", 3},    {"ment", "", 3},
        {"ites", "", 3},      {"ite", "", 3},      {"ives", "iv", 2},
        {"ive", "iv", 2},     {"eaux", "eau", 1},  {"aux", "al", 1},
    };
    if (!apply_suffix_rules(w, derivational, std::size(derivational))) {
        static const SuffixRule plural[] = {
            {"es", "", 3}, {"s", "", 3}, {"e", "", 3},
        };
        apply_suffix_rules(w, plural, std::size(plural));
    }
}

void stem_spanish(std::string& w) {
    static const SuffixRule derivational[] = {
        {"amientos", "", 3}, {"imientos", "", 3}, {"amiento", "", 3},
        {"imiento", "", 3},  {"aciones", "", 3},  {"acion", "", 3},
        {"adoras", "", 3},   {"adores", "", 3},   {"adora", "", 3},
        {"ador", "", 3},     {"ancias", "anc", 2}, {"ancia", "anc", 2},
        {"encias", "enc", 2}, {"encia", "enc", 2}, {"logias", "log", 2},
        {"logia", "log", 2}, {"idades", "", 3},   {"idad", "", 3},
        {"istas", "ist", 2}, {"ista", "ist", 2},  {"ibles", "", 3},
        {"ible", "", 3},     {"mente", "", 3},    {"antes", "ant", 2},
        {"ante", "ant", 2},  {"osos", "os", 2},   {"osas", "os", 2},
        {"oso", "os", 2},    {"osa", "os", 2},
    };
    if (!apply_suffix_rules(w, derivational, std::size(derivational))) {
        static const SuffixRule plural[] = {
            {"es", "", 3}, {"s", "", 3}, {"a", "", 3}, {"o", "", 3},
            {"e", "", 3},
        };
        apply_suffix_rules(w, plural, std::size(plural));
    }
}

void stem_german(std::string& w) {
    static const SuffixRule rules[] = {
        {"ungen", "", 3}, {"igkeit", "", 3}, {"heiten", "", 3},
        {"keiten", "", 3}, {"heit", "", 3},  {"keit", "", 3},
        {"ung", "", 3},   {"isch", "", 3},  {"lich", "", 3},
        {"erin", "", 3},  {"ern", "", 3},   {"em", "", 3},
        {"en", "", 3},    {"er", "", 3},    {"es", "", 3},
        {"e", "", 3},     {"s", "", 3},     {"n", "", 3},
    };
    apply_suffix_rules(w, rules, std::size(rules));
}

void stem_romanian(std::string& w) {
    static const SuffixRule rules[] = {
        {"urilor", "", 3}, {"iilor", "", 3}, {"atiei", "", 3},
        {"ului", "", 3},   {"elor", "", 3},  {"ilor", "", 3},
        {"atie", "", 3},   {"uri", "", 3},   {"ile", "", 3},
        {"ele", "", 3},    {"ii", "", 3},    {"ul", "", 3},
        {"le", "", 3},     {"ei", "", 3},    {"a", "", 3},
        {"i", "", 3},      {"e", "", 3},
    };
    apply_suffix_rules(w, rules, std::size(rules));
}

void stem_catalan(std::string& w) {
    static const SuffixRule derivational[] = {
        {"aments", "", 3}, {"ament", "", 3}, {"acions", "", 3},
        {"acio", "", 3},   {"adors", "", 3}, {"adora", "", 3},
        {"ador", "", 3},   {"logies", "log", 2}, {"logia", "log", 2},
        {"itats", "", 3},  {"itat", "", 3},  {"istes", "ist", 2},
        {"ista", "ist", 2}, {"ments", "", 3}, {"ment", "", 3},
        {"ants", "ant", 2}, {"ant", "ant", 2}, {"osos", "os", 2},
        {"oses", "os", 2},
    };
    if (!apply_suffix_rules(w, derivational, std::size(derivational))) {
        static const SuffixRule plural[] = {
            {"es", "", 3}, {"s", "", 3}, {"a", "", 3}, {"e", "", 3},
            {"o", "", 3},
        };
        apply_suffix_rules(w, plural, std::size(plural));
    }
}

void stem_basque(std::string& w) {
    static const SuffixRule rules[] = {
        {"etako", "", 3}, {"etatik", "", 3}, {"etara", "", 3},
        {"arekin", "", 3}, {"aren", "", 3},  {"etan", "", 3},
        {"ean", "", 3},   {"era", "", 3},    {"tik", "", 3},
        {"ak", "", 3},    {"ek", "", 3},     {"en", "", 3},
        {"an", "", 3},    {"ko", "", 3},     {"ra", "", 3},
        {"a", "", 3},
    };
    apply_suffix_rules(w, rules, std::size(rules));
}

void stem_greek(std::string& w) {
    // Folded Greek text: lowercase, tonos stripped, final sigma normalized.
    static const SuffixRule rules[] = {
        {"ματων", "μα", 2},  // -ματων
        {"ματα", "μα", 2},        // -ματα
        {"ιων", "", 3},                          // -ιων
        {"εων", "", 3},                          // -εων
        {"ους", "", 3},                          // -ους
        {"ων", "", 3},                                // -ων
        {"ου", "", 3},                                // -ου
        {"ος", "", 3},                                // -ος
        {"ες", "", 3},                                // -ες
        {"ας", "", 3},                                // -ας
        {"ης", "", 3},                                // -ης
        {"οι", "", 3},                                // -οι
        {"αι", "", 3},                                // -αι
        {"α", "", 3},                                      // -α
        {"η", "", 3},                                      // -η
        {"ο", "", 3},                                      // -ο
    };
    apply_suffix_rules(w, rules, std::size(rules));
}

void stem_arabic(std::string& w) {
    // Light stemming on normalized text (harakat and tatweel already gone).
    static const char* prefixes[] = {
        "وال",  // wal-
        "بال",  // bal-
        "كال",  // kal-
        "فال",  // fal-
        "ال",        // al-
        "لل",        // lil-
    };
    for (const char* p : prefixes) {
        std::size_t n = std::strlen(p);
        if (w.size() > n && w.compare(0, n, p) == 0 &&
            utf8::length(std::string_view(w).substr(n)) >= 3) {
            w.erase(0, n);
            break;
        }
    }
    static const SuffixRule suffixes[] = {
        {"ها", "", 3},  // -ha
        {"ان", "", 3},  // -an
        {"ات", "", 3},  // -at
        {"ون", "", 3},  // -wn
        {"ين", "", 3},  // -yn
        {"ية", "", 3},  // -yah
        {"ة", "", 3},        // ta marbuta
        {"ه", "", 3},        // -h
        {"ي", "", 3},        // -y
    };
    apply_suffix_rules(w, suffixes, std::size(suffixes));
}

void stem_once(const std::string& lang, std::string& w) {
    if (lang == "en") {
        w = porter_stem_once(w);
    } else if (lang == "fr") {
        stem_french(w);
    } else if (lang == "es") {
        stem_spanish(w);
    } else if (lang == "de") {
        stem_german(w);
    } else if (lang == "ro") {
        stem_romanian(w);
    } else if (lang == "ca") {
        stem_catalan(w);
    } else if (lang == "eu") {
        stem_basque(w);
    } else if (lang == "el") {
        stem_greek(w);
    } else if (lang == "ar") {
        stem_arabic(w);
    }
    // Other editions (Occitan among them): no stemming.
}

}  // namespace

std::string porter_stem_once(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    porter_step1ab(w);
    porter_step1c(w);
    porter_step2(w);
    porter_step3(w);
    porter_step4(w);
    porter_step5(w);
    return w;
}

bool has_stemmer(const std::string& lang) {
    static const std::unordered_set<std::string> langs = {
        "en", "fr", "es", "de", "ro", "ca", "eu", "el", "ar"};
    return langs.count(lang) > 0;
}

std::string stem(const std::string& lang, std::string_view token) {
    std::string w(token);
    if (!has_stemmer(lang)) return w;
    // Iterate to a fixed point so that stemming is idempotent. A seen set
    // guards against hypothetical rewrite cycles; if one occurs, the
    // lexicographically smallest member is the canonical form.
    std::vector<std::string> seen;
    while (true) {
        std::string next = w;
        stem_once(lang, next);
        if (next == w) return w;
        for (const auto& s : seen) {
            if (s == next) {
                std::string best = next;
                bool in_cycle = false;
                for (const auto& t : seen) {
                    if (t == next) in_cycle = true;
                    if (in_cycle && t < best) best = t;
                }
                return best;
            }
        }
        seen.push_back(w);
        w = std::move(next);
    }
}

}  // namespace tailor
