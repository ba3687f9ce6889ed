#pragma once
// Text normalization and structural feature extraction for parsed ideas.

#include <string>
#include <string_view>

#include "varcomp/util.hpp"

namespace varcomp {

inline bool is_trailing_punct(char c) {
    return c == '.' || c == ',' || c == ';' || c == '!' || c == '?';
}

// Canonical form used for duplicate detection and keyword matching:
// ASCII lowercase, leading whitespace removed, and trailing characters
// drawn from {whitespace, . , ; ! ?} stripped until none remain. Stripping
// whitespace and punctuation together makes the map idempotent.
inline std::string normalize_idea(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && is_ascii_space(text[b])) ++b;
    while (e > b && (is_ascii_space(text[e - 1]) || is_trailing_punct(text[e - 1]))) --e;
    std::string out(text.substr(b, e - b));
    for (char& c : out) c = ascii_lower(c);
    return out;
}

// En dash and em dash in UTF-8.
inline bool contains_dash(std::string_view s) {
    if (s.find('-') != std::string_view::npos) return true;
    if (s.find("\xE2\x80\x93") != std::string_view::npos) return true;
    if (s.find("\xE2\x80\x94") != std::string_view::npos) return true;
    return false;
}

inline bool contains_digit(std::string_view s) {
    for (char c : s)
        if (c >= '0' && c <= '9') return true;
    return false;
}

inline bool contains_colon(std::string_view s) {
    return s.find(':') != std::string_view::npos;
}

}  // namespace varcomp
