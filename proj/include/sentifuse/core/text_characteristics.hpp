#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sentifuse/core/defaults.hpp"
#include "sentifuse/core/tokenize.hpp"
#include "sentifuse/core/types.hpp"

namespace sentifuse {

// Configuration behind psi(x). Defaults: builtin cue lists and lexicon,
// short below 8 tokens, long above 40.
struct CharacteristicsConfig {
    std::vector<std::string> negation_cues = default_negation_cues();
    std::vector<std::string> contrast_connectives = default_contrast_connectives();
    std::size_t short_below = 8;
    std::size_t long_above = 40;
    std::map<std::string, double> polarity_lexicon = builtin_lexicon();
};

inline bool is_negation_token(std::string_view token, const std::vector<std::string>& cues) {
    for (const auto& cue : cues) {
        if (cue == "n't") {
            if (token.size() >= 3 && token.substr(token.size() - 3) == "n't") return true;
        } else if (token == cue) {
            return true;
        }
    }
    return false;
}

// psi(x) over already-normalized text. Pure and deterministic; empty text
// yields zero counts, all flags false and the short bucket.
inline TextCharacteristics extract_text_characteristics(
    std::string_view text, const CharacteristicsConfig& config = {}) {
    TextCharacteristics out;
    const std::vector<std::string> tokens = tokenize(text);
    out.token_count = tokens.size();

    std::set<std::string_view> polar_tokens;
    for (const auto& tok : tokens) {
        if (is_negation_token(tok, config.negation_cues)) out.has_negation = true;
        if (std::find(config.contrast_connectives.begin(), config.contrast_connectives.end(),
                      tok) != config.contrast_connectives.end())
            out.has_contrast_connective = true;
        auto it = config.polarity_lexicon.find(tok);
        if (it != config.polarity_lexicon.end()) {
            if (it->second > 0.0) ++out.positive_cue_count;
            if (it->second < 0.0) ++out.negative_cue_count;
            if (it->second != 0.0) polar_tokens.insert(it->first);
        }
    }
    out.emotional_complexity = polar_tokens.size();
    out.mixed_emotions = out.positive_cue_count > 0 && out.negative_cue_count > 0;

    if (out.token_count < config.short_below)
        out.length_bucket = LengthBucket::short_text;
    else if (out.token_count > config.long_above)
        out.length_bucket = LengthBucket::long_text;
    else
        out.length_bucket = LengthBucket::medium_text;
    return out;
}

}  // namespace sentifuse
