#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace sentifuse {

namespace detail {

inline bool starts_with_url(std::string_view token) {
    return token.starts_with("http://") || token.starts_with("https://") ||
           token.starts_with("www.");
}

inline bool starts_with_mention(std::string_view token) {
    if (token.size() < 2 || token[0] != '@') return false;
    const auto c = static_cast<unsigned char>(token[1]);
    return std::isalnum(c) != 0 || c == '_';
}

}  // namespace detail

// Text normalization: ASCII lowercase, URLs -> <url>, @mentions -> <user>,
// whitespace runs collapsed to single spaces, ends trimmed. Punctuation and
// emoji are preserved (pattern models rely on them). Idempotent.
inline std::string normalize(std::string_view text) {
    std::string lowered;
    lowered.reserve(text.size());
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        lowered.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    }

    std::string out;
    out.reserve(lowered.size());
    std::size_t i = 0;
    const std::size_t n = lowered.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(lowered[i]))) ++i;
        if (i >= n) break;
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(lowered[i]))) ++i;
        std::string_view token(lowered.data() + start, i - start);
        if (!out.empty()) out.push_back(' ');
        if (detail::starts_with_url(token)) {
            out += "<url>";
        } else if (detail::starts_with_mention(token)) {
            out += "<user>";
        } else {
            out += token;
        }
    }
    return out;
}

}  // namespace sentifuse
