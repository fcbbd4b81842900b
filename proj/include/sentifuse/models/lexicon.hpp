#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sentifuse/core/defaults.hpp"
#include "sentifuse/core/text_characteristics.hpp"
#include "sentifuse/core/tokenize.hpp"
#include "sentifuse/core/types.hpp"
#include "sentifuse/error.hpp"

namespace sentifuse {

struct PolarityLexicon {
    std::map<std::string, double> entries;       // term -> weight in [-1, 1]
    std::map<std::string, double> intensifiers;  // term -> multiplier > 0
    int negation_window = 3;                     // preceding tokens scanned per hit
    std::vector<std::string> negation_cues = default_negation_cues();
};

inline PolarityLexicon default_polarity_lexicon() {
    PolarityLexicon lex;
    lex.entries = builtin_lexicon();
    lex.intensifiers = builtin_intensifiers();
    return lex;
}

// Word-level polarity aggregation. Each lexicon hit takes the nearest
// preceding intensifier multiplier within the window and flips sign when
// any negation cue precedes it within the window (single flip, no parity
// rule). Output is the clamped mean of adjusted hit weights.
inline RawModelOutput lexicon_predict(const PolarityLexicon& lexicon,
                                      std::string_view normalized_text) {
    const std::vector<std::string> tokens = tokenize(normalized_text);
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto it = lexicon.entries.find(tokens[i]);
        if (it == lexicon.entries.end()) continue;
        double w = it->second;
        const std::size_t window = static_cast<std::size_t>(std::max(lexicon.negation_window, 1));
        const std::size_t first = i > window ? i - window : 0;
        for (std::size_t j = i; j-- > first;) {
            auto amp = lexicon.intensifiers.find(tokens[j]);
            if (amp != lexicon.intensifiers.end()) {
                w *= amp->second;
                break;
            }
        }
        bool negated = false;
        for (std::size_t j = first; j < i; ++j) {
            if (is_negation_token(tokens[j], lexicon.negation_cues)) {
                negated = true;
                break;
            }
        }
        if (negated) w = -w;
        sum += w;
        ++hits;
    }
    if (hits == 0) return Score{0.0};
    return Score{std::clamp(sum / static_cast<double>(hits), -1.0, 1.0)};
}

namespace detail {

inline std::vector<std::vector<std::string>> read_tsv_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCategory::config, "cannot open fixture file '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        fields.push_back(std::to_string(line_no));  // line number rides along for errors
        rows.push_back(std::move(fields));
    }
    return rows;
}

inline double parse_fixture_number(const std::string& text, const std::string& path,
                                   const std::string& line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCategory::data,
                    path + ":" + line_no + ": not a number: '" + text + "'");
    }
}

}  // namespace detail

// Lexicon fixture: `term<TAB>weight`, '#' comments. Intensifiers and
// negation settings keep their defaults; callers may override afterwards.
inline PolarityLexicon load_lexicon_file(const std::string& path) {
    PolarityLexicon lex;
    lex.intensifiers = builtin_intensifiers();
    for (const auto& row : detail::read_tsv_fixture(path)) {
        const std::string& line_no = row.back();
        if (row.size() != 3) {  // term, weight, line_no
            throw Error(ErrorCategory::data,
                        path + ":" + line_no + ": expected 'term<TAB>weight'");
        }
        double w = detail::parse_fixture_number(row[1], path, line_no);
        if (w < -1.0 || w > 1.0)
            throw Error(ErrorCategory::data,
                        path + ":" + line_no + ": weight outside [-1,1]");
        lex.entries[row[0]] = w;
    }
    return lex;
}

}  // namespace sentifuse
