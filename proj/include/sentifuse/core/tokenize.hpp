#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace sentifuse {

// Whitespace-plus-punctuation splitting of normalized text.
// Kept inside tokens: alphanumerics, underscores, intra-word apostrophes
// (so "don't" stays whole and the "n't" cue can match), angle brackets
// (so "<url>"/"<user>" stay whole) and any non-ASCII byte (emoji).
inline bool is_token_char(unsigned char c) {
    return std::isalnum(c) || c == '\'' || c == '_' || c == '<' || c == '>' || c >= 0x80;
}

inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && !is_token_char(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < n && is_token_char(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            std::size_t b = start, e = i;
            while (b < e && text[b] == '\'') ++b;
            while (e > b && text[e - 1] == '\'') --e;
            if (e > b) tokens.emplace_back(text.substr(b, e - b));
        }
    }
    return tokens;
}

}  // namespace sentifuse
