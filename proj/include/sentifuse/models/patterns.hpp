#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sentifuse/core/defaults.hpp"
#include "sentifuse/core/tokenize.hpp"
#include "sentifuse/core/types.hpp"
#include "sentifuse/models/lexicon.hpp"

namespace sentifuse {

struct Pattern {
    std::string matcher;  // token sequence ("never again") or literal (":)")
    double polarity = 0.0;  // in [-1, 1]
    double weight = 1.0;    // > 0
};

struct PatternSet {
    std::vector<Pattern> patterns;
};

inline PatternSet default_pattern_set() {
    PatternSet set;
    for (const auto& p : builtin_patterns()) set.patterns.push_back({p.matcher, p.polarity, p.weight});
    return set;
}

namespace detail {

inline bool has_alnum(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isalnum(c) != 0; });
}

// Matchers with word content match as consecutive token sequences; pure
// symbol/emoji matchers match as raw substrings (non-overlapping).
inline std::size_t count_pattern_matches(const Pattern& pattern, std::string_view text,
                                         const std::vector<std::string>& tokens) {
    if (has_alnum(pattern.matcher)) {
        const std::vector<std::string> want = tokenize(pattern.matcher);
        if (want.empty() || tokens.size() < want.size()) return 0;
        std::size_t count = 0;
        for (std::size_t i = 0; i + want.size() <= tokens.size(); ++i) {
            bool match = true;
            for (std::size_t j = 0; j < want.size(); ++j) {
                if (tokens[i + j] != want[j]) {
                    match = false;
                    break;
                }
            }
            if (match) ++count;
        }
        return count;
    }
    if (pattern.matcher.empty()) return 0;
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(pattern.matcher, pos)) != std::string_view::npos) {
        ++count;
        pos += pattern.matcher.size();
    }
    return count;
}

}  // namespace detail

// Reliability-weighted mean of matched-pattern polarities:
// s = clamp(sum(polarity*weight*count) / sum(weight*count), -1, 1).
inline RawModelOutput pattern_predict(const PatternSet& set, std::string_view normalized_text) {
    const std::vector<std::string> tokens = tokenize(normalized_text);
    double num = 0.0, den = 0.0;
    for (const auto& pattern : set.patterns) {
        const std::size_t count = detail::count_pattern_matches(pattern, normalized_text, tokens);
        if (count == 0) continue;
        num += pattern.polarity * pattern.weight * static_cast<double>(count);
        den += pattern.weight * static_cast<double>(count);
    }
    if (den <= 0.0) return Score{0.0};
    return Score{std::clamp(num / den, -1.0, 1.0)};
}

// Pattern fixture: `pattern<TAB>polarity<TAB>weight`, '#' comments.
inline PatternSet load_pattern_file(const std::string& path) {
    PatternSet set;
    for (const auto& row : detail::read_tsv_fixture(path)) {
        const std::string& line_no = row.back();
        if (row.size() != 4) {  // pattern, polarity, weight, line_no
            throw Error(ErrorCategory::data,
                        path + ":" + line_no + ": expected 'pattern<TAB>polarity<TAB>weight'");
        }
        Pattern p;
        p.matcher = row[0];
        p.polarity = detail::parse_fixture_number(row[1], path, line_no);
        p.weight = detail::parse_fixture_number(row[2], path, line_no);
        if (p.polarity < -1.0 || p.polarity > 1.0)
            throw Error(ErrorCategory::data, path + ":" + line_no + ": polarity outside [-1,1]");
        if (!(p.weight > 0.0))
            throw Error(ErrorCategory::data, path + ":" + line_no + ": weight must be positive");
        set.patterns.push_back(std::move(p));
    }
    return set;
}

}  // namespace sentifuse
