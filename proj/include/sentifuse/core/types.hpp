#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sentifuse/error.hpp"

namespace sentifuse {

// Canonical label order: negative < neutral < positive. Indices are used
// for confusion-matrix axes, classifier class rows and tie-breaking.
enum class SentimentLabel : int { negative = 0, neutral = 1, positive = 2 };

inline constexpr std::array<SentimentLabel, 3> kCanonicalLabels = {
    SentimentLabel::negative, SentimentLabel::neutral, SentimentLabel::positive};

inline constexpr std::size_t kLabelCount = 3;

inline constexpr int label_index(SentimentLabel l) { return static_cast<int>(l); }

inline const char* to_string(SentimentLabel l) {
    switch (l) {
        case SentimentLabel::negative: return "negative";
        case SentimentLabel::neutral: return "neutral";
        case SentimentLabel::positive: return "positive";
    }
    return "?";
}

inline SentimentLabel label_from_string(std::string_view s) {
    if (s == "negative") return SentimentLabel::negative;
    if (s == "neutral") return SentimentLabel::neutral;
    if (s == "positive") return SentimentLabel::positive;
    throw Error(ErrorCategory::data, "unknown sentiment label '" + std::string(s) + "'");
}

enum class ModelKind : int { lexicon = 0, pattern = 1, machine_learning = 2, encoding = 3 };

inline constexpr std::size_t kModelKindCount = 4;

inline const char* to_string(ModelKind k) {
    switch (k) {
        case ModelKind::lexicon: return "lexicon";
        case ModelKind::pattern: return "pattern";
        case ModelKind::machine_learning: return "machine_learning";
        case ModelKind::encoding: return "encoding";
    }
    return "?";
}

inline ModelKind model_kind_from_string(std::string_view s) {
    if (s == "lexicon") return ModelKind::lexicon;
    if (s == "pattern") return ModelKind::pattern;
    if (s == "machine_learning") return ModelKind::machine_learning;
    if (s == "encoding") return ModelKind::encoding;
    throw Error(ErrorCategory::config, "unknown model kind '" + std::string(s) + "'");
}

// Heterogeneous base-model output. Exactly one variant per prediction.
struct Probabilities {
    double p_pos = 0.0;
    double p_neg = 0.0;
};

struct Score {
    double value = 0.0;  // in [-1, 1]
};

struct Logits {
    double v_pos = 0.0;
    double v_neg = 0.0;
};

struct DiscreteLabel {
    SentimentLabel label = SentimentLabel::neutral;
};

using RawModelOutput = std::variant<Probabilities, Score, Logits, DiscreteLabel>;

inline const char* variant_name(const RawModelOutput& out) {
    switch (out.index()) {
        case 0: return "probabilities";
        case 1: return "score";
        case 2: return "logits";
        case 3: return "label";
    }
    return "?";
}

// Throws invalid_output when a variant breaks its invariants. `context`
// usually names the producing model.
inline void validate_output(const RawModelOutput& out, std::string_view context = {}) {
    auto fail = [&](const std::string& what) {
        std::string msg = "invalid " + std::string(variant_name(out)) + " output";
        if (!context.empty()) msg += " from model '" + std::string(context) + "'";
        msg += ": " + what;
        throw Error(ErrorCategory::invalid_output, msg);
    };
    if (const auto* p = std::get_if<Probabilities>(&out)) {
        if (!std::isfinite(p->p_pos) || !std::isfinite(p->p_neg)) fail("non-finite probability");
        if (p->p_pos < 0.0 || p->p_pos > 1.0 || p->p_neg < 0.0 || p->p_neg > 1.0)
            fail("probability outside [0,1]");
        if (std::abs(p->p_pos + p->p_neg - 1.0) > 1e-9) fail("probabilities do not sum to 1");
    } else if (const auto* s = std::get_if<Score>(&out)) {
        if (!std::isfinite(s->value)) fail("non-finite score");
        if (s->value < -1.0 || s->value > 1.0) fail("score outside [-1,1]");
    } else if (const auto* l = std::get_if<Logits>(&out)) {
        if (!std::isfinite(l->v_pos) || !std::isfinite(l->v_neg)) fail("non-finite logit");
    }
}

// Binary polarity distribution: p_pos + p_neg = 1 within 1e-9.
struct PolarityDistribution {
    double p_pos = 0.5;
    double p_neg = 0.5;

    double confidence() const { return p_pos > p_neg ? p_pos : p_neg; }
    double margin() const { return std::abs(p_pos - p_neg); }

    bool valid() const {
        return std::isfinite(p_pos) && std::isfinite(p_neg) && p_pos >= 0.0 && p_pos <= 1.0 &&
               p_neg >= 0.0 && p_neg <= 1.0 && std::abs(p_pos + p_neg - 1.0) <= 1e-9;
    }
};

// Probability over all three canonical labels, indexed by label order.
struct CategoryDistribution {
    std::array<double, kLabelCount> p{0.0, 0.0, 0.0};

    double of(SentimentLabel l) const { return p[static_cast<std::size_t>(label_index(l))]; }

    bool valid() const {
        double sum = 0.0;
        for (double v : p) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0) return false;
            sum += v;
        }
        return std::abs(sum - 1.0) <= 1e-9;
    }
};

// Parallel value/name vectors; schema identity is what feature-level fusion
// checks before applying a trained meta-classifier.
struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> schema;

    std::size_t size() const { return values.size(); }
};

enum class LengthBucket : int { short_text = 0, medium_text = 1, long_text = 2 };

inline const char* to_string(LengthBucket b) {
    switch (b) {
        case LengthBucket::short_text: return "short";
        case LengthBucket::medium_text: return "medium";
        case LengthBucket::long_text: return "long";
    }
    return "?";
}

// psi(x): per-text signals that drive adaptive fusion and the
// per-characteristic evaluation buckets.
struct TextCharacteristics {
    std::size_t token_count = 0;
    bool has_negation = false;
    std::size_t positive_cue_count = 0;
    std::size_t negative_cue_count = 0;
    std::size_t emotional_complexity = 0;  // distinct polarity-bearing tokens
    bool mixed_emotions = false;
    bool has_contrast_connective = false;
    LengthBucket length_bucket = LengthBucket::short_text;
};

}  // namespace sentifuse
