#pragma once
// Extraction of idea lists from raw generator output.
//
// Accepted input is a JSON object holding an array of strings under a
// required key. A single surrounding code-fence line pair is tolerated.
// List markers and wrapping quotes are stripped from each entry before the
// empty check; empty and whitespace-only entries are dropped.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "varcomp/error.hpp"
#include "varcomp/util.hpp"

namespace varcomp {

namespace detail {

// Removes one leading and one trailing ``` fence line if both are present.
inline std::string_view strip_fences(std::string_view s) {
    std::string_view t = trim(s);
    if (t.size() < 6 || t.substr(0, 3) != "```") return t;
    size_t first_nl = t.find('\n');
    if (first_nl == std::string_view::npos) return t;
    size_t last_fence = t.rfind("```");
    if (last_fence <= first_nl) return t;
    return trim(t.substr(first_nl + 1, last_fence - first_nl - 1));
}

// Drops a leading list marker ("- ", "* ", "3. ", "12) ") and one pair of
// wrapping quotes.
inline std::string_view strip_artifacts(std::string_view s) {
    std::string_view t = trim(s);
    if (t.size() >= 2 && (t[0] == '-' || t[0] == '*') && is_ascii_space(t[1])) {
        t = trim(t.substr(2));
    } else {
        size_t i = 0;
        while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i;
        if (i > 0 && i + 1 < t.size() && (t[i] == '.' || t[i] == ')') && is_ascii_space(t[i + 1]))
            t = trim(t.substr(i + 2));
    }
    if (t.size() >= 2 && ((t.front() == '"' && t.back() == '"') || (t.front() == '\'' && t.back() == '\'')))
        t = trim(t.substr(1, t.size() - 2));
    return t;
}

}  // namespace detail

// Returns the cleaned idea strings under `required_key`, in input order.
// Throws ParseFailed when the text is not a JSON object carrying an array
// under that key; such responses are excluded from scoring upstream.
inline std::vector<std::string> parse_generation(std::string_view raw_text,
                                                 const std::string& required_key) {
    if (required_key.empty()) throw InvalidSpec("required key must be nonempty");
    std::string_view body = detail::strip_fences(raw_text);
    nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw ParseFailed("response is not a JSON object");
    auto it = doc.find(required_key);
    if (it == doc.end())
        throw ParseFailed("response lacks key '" + required_key + "'");
    if (!it->is_array())
        throw ParseFailed("value under '" + required_key + "' is not an array");
    std::vector<std::string> out;
    out.reserve(it->size());
    for (const auto& item : *it) {
        if (!item.is_string()) continue;  // stray non-string entries are artifacts
        std::string_view cleaned = detail::strip_artifacts(item.get_ref<const std::string&>());
        if (!cleaned.empty()) out.emplace_back(cleaned);
    }
    return out;
}

}  // namespace varcomp
