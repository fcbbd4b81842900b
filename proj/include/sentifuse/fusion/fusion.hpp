#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentifuse/core/types.hpp"
#include "sentifuse/error.hpp"
#include "sentifuse/models/logistic_regression.hpp"

namespace sentifuse {

// Trained decision-fusion weights, aligned with registry order.
struct FusionWeights {
    std::vector<double> values;

    static FusionWeights create(std::vector<double> w) {
        double sum = 0.0;
        for (double v : w) {
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw Error(ErrorCategory::config, "fusion weights must lie in [0,1]");
            sum += v;
        }
        if (!(sum > 0.0))
            throw Error(ErrorCategory::config, "fusion weights must not all be zero");
        return FusionWeights{std::move(w)};
    }
};

namespace detail {

// Shared weighted-average core: (sum w_i * S(O_i)) / (sum w_i).
// Requires non-negative weights with a positive sum.
inline PolarityDistribution weighted_merge(std::span<const double> weights,
                                           std::span<const PolarityDistribution> dists) {
    if (weights.size() != dists.size())
        throw Error(ErrorCategory::config, "weight count does not match distribution count");
    if (dists.empty())
        throw Error(ErrorCategory::config, "cannot fuse an empty distribution list");
    double num_pos = 0.0, num_neg = 0.0, den = 0.0;
    for (std::size_t i = 0; i < dists.size(); ++i) {
        num_pos += weights[i] * dists[i].p_pos;
        num_neg += weights[i] * dists[i].p_neg;
        den += weights[i];
    }
    if (!(den > 0.0))
        throw Error(ErrorCategory::config, "fusion weights sum to zero");
    return {num_pos / den, num_neg / den};
}

}  // namespace detail

// Decision-level fusion: weighted average of standardized distributions.
inline PolarityDistribution decision_fuse(const FusionWeights& weights,
                                          std::span<const PolarityDistribution> dists) {
    return detail::weighted_merge(weights.values, dists);
}

inline PolarityDistribution simple_average(std::span<const PolarityDistribution> dists) {
    if (dists.empty()) throw Error(ErrorCategory::config, "cannot average an empty pool");
    const std::vector<double> ones(dists.size(), 1.0);
    return detail::weighted_merge(ones, dists);
}

inline PolarityDistribution confidence_weighted(std::span<const PolarityDistribution> dists) {
    if (dists.empty()) throw Error(ErrorCategory::config, "cannot average an empty pool");
    std::vector<double> w;
    w.reserve(dists.size());
    for (const auto& d : dists) w.push_back(d.confidence());
    return detail::weighted_merge(w, dists);
}

// Per-component medians, renormalized back to a distribution.
inline PolarityDistribution median_average(std::span<const PolarityDistribution> dists) {
    if (dists.empty()) throw Error(ErrorCategory::config, "cannot average an empty pool");
    auto median_of = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        const std::size_t n = v.size();
        return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
    };
    std::vector<double> pos, neg;
    pos.reserve(dists.size());
    neg.reserve(dists.size());
    for (const auto& d : dists) {
        pos.push_back(d.p_pos);
        neg.push_back(d.p_neg);
    }
    const double mp = median_of(std::move(pos));
    const double mn = median_of(std::move(neg));
    const double z = mp + mn;
    if (z <= 0.0) return {0.5, 0.5};
    return {mp / z, mn / z};
}

// The distribution with the largest max-component; ties keep the lowest index.
inline PolarityDistribution max_confidence(std::span<const PolarityDistribution> dists) {
    if (dists.empty()) throw Error(ErrorCategory::config, "cannot select from an empty pool");
    std::size_t best = 0;
    for (std::size_t i = 1; i < dists.size(); ++i) {
        if (dists[i].confidence() > dists[best].confidence()) best = i;
    }
    return dists[best];
}

// How strongly a distribution backs a given vote. Neutral support is
// closeness to the balanced point.
inline double label_support(SentimentLabel label, const PolarityDistribution& d) {
    switch (label) {
        case SentimentLabel::positive: return d.p_pos;
        case SentimentLabel::negative: return d.p_neg;
        case SentimentLabel::neutral: return 1.0 - d.margin();
    }
    return 0.0;
}

// Modal label. Count ties go to the tied label with the larger mean
// supporting probability among its voters; remaining ties fall to the
// earliest label in canonical order.
inline SentimentLabel majority_vote(std::span<const SentimentLabel> labels,
                                    std::span<const PolarityDistribution> dists) {
    if (labels.empty() || labels.size() != dists.size())
        throw Error(ErrorCategory::config, "majority vote needs aligned, non-empty labels/distributions");
    std::array<std::size_t, kLabelCount> votes{};
    std::array<double, kLabelCount> support_sum{};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto idx = static_cast<std::size_t>(label_index(labels[i]));
        ++votes[idx];
        support_sum[idx] += label_support(labels[i], dists[i]);
    }
    std::size_t best = kLabelCount;  // sentinel
    for (std::size_t c = 0; c < kLabelCount; ++c) {
        if (votes[c] == 0) continue;
        if (best == kLabelCount) {
            best = c;
            continue;
        }
        const double mean_c = support_sum[c] / static_cast<double>(votes[c]);
        const double mean_b = support_sum[best] / static_cast<double>(votes[best]);
        if (votes[c] > votes[best] || (votes[c] == votes[best] && mean_c > mean_b)) best = c;
    }
    return kCanonicalLabels[best];
}

enum class RuleCondition : int {
    has_negation = 0,
    mixed_emotions = 1,
    short_text = 2,
    long_text = 3,
    has_contrast_connective = 4,
    emotional_complexity_at_least = 5,
};

inline const char* to_string(RuleCondition c) {
    switch (c) {
        case RuleCondition::has_negation: return "has_negation";
        case RuleCondition::mixed_emotions: return "mixed_emotions";
        case RuleCondition::short_text: return "short_text";
        case RuleCondition::long_text: return "long_text";
        case RuleCondition::has_contrast_connective: return "has_contrast_connective";
        case RuleCondition::emotional_complexity_at_least: return "emotional_complexity_at_least";
    }
    return "?";
}

inline RuleCondition rule_condition_from_string(std::string_view s) {
    if (s == "has_negation") return RuleCondition::has_negation;
    if (s == "mixed_emotions") return RuleCondition::mixed_emotions;
    if (s == "short_text") return RuleCondition::short_text;
    if (s == "long_text") return RuleCondition::long_text;
    if (s == "has_contrast_connective") return RuleCondition::has_contrast_connective;
    if (s == "emotional_complexity_at_least") return RuleCondition::emotional_complexity_at_least;
    throw Error(ErrorCategory::config, "unknown rule condition '" + std::string(s) + "'");
}

// When `condition` fires on a text, every model of `target_kind` has its
// weight multiplied by `multiplier`. Base weight is 1.0 per model.
struct AdaptiveRule {
    RuleCondition condition = RuleCondition::has_negation;
    std::size_t threshold = 0;  // only for emotional_complexity_at_least
    ModelKind target_kind = ModelKind::lexicon;
    double multiplier = 1.0;

    void validate() const {
        if (!std::isfinite(multiplier) || !(multiplier > 0.0))
            throw Error(ErrorCategory::config, "adaptive rule multiplier must be finite and positive");
    }
};

inline bool rule_fires(const AdaptiveRule& rule, const TextCharacteristics& c) {
    switch (rule.condition) {
        case RuleCondition::has_negation: return c.has_negation;
        case RuleCondition::mixed_emotions: return c.mixed_emotions;
        case RuleCondition::short_text: return c.length_bucket == LengthBucket::short_text;
        case RuleCondition::long_text: return c.length_bucket == LengthBucket::long_text;
        case RuleCondition::has_contrast_connective: return c.has_contrast_connective;
        case RuleCondition::emotional_complexity_at_least:
            return c.emotional_complexity >= rule.threshold;
    }
    return false;
}

// w_i(x): 1.0 times the multiplier of every firing rule targeting kinds[i].
inline std::vector<double> adaptive_weights(std::span<const AdaptiveRule> rules,
                                            const TextCharacteristics& characteristics,
                                            std::span<const ModelKind> kinds) {
    std::vector<double> w(kinds.size(), 1.0);
    for (const auto& rule : rules) {
        rule.validate();
        if (!rule_fires(rule, characteristics)) continue;
        for (std::size_t i = 0; i < kinds.size(); ++i) {
            if (kinds[i] == rule.target_kind) w[i] *= rule.multiplier;
        }
    }
    return w;
}

// Adaptive fusion: decision fusion under text-dependent weights w(x).
inline PolarityDistribution adaptive_fuse(std::span<const AdaptiveRule> rules,
                                          const TextCharacteristics& characteristics,
                                          std::span<const ModelKind> kinds,
                                          std::span<const PolarityDistribution> dists) {
    if (kinds.size() != dists.size())
        throw Error(ErrorCategory::config, "model kind count does not match distribution count");
    const std::vector<double> w = adaptive_weights(rules, characteristics, kinds);
    return detail::weighted_merge(w, dists);
}

inline void validate_delta(double delta) {
    if (!std::isfinite(delta) || delta < 0.0 || delta > 1.0)
        throw Error(ErrorCategory::config, "confidence threshold delta must lie in [0,1]");
}

// Classification head: positive/negative only past the delta margin,
// neutral otherwise.
inline SentimentLabel classify(const PolarityDistribution& dist, double delta) {
    validate_delta(delta);
    if (dist.p_pos > dist.p_neg + delta) return SentimentLabel::positive;
    if (dist.p_neg > dist.p_pos + delta) return SentimentLabel::negative;
    return SentimentLabel::neutral;
}

// Multiclass head: argmax label when it clears the runner-up by more than
// delta, neutral otherwise. Exact ties have margin zero and fall to neutral.
inline SentimentLabel classify_category(const CategoryDistribution& dist, double delta) {
    validate_delta(delta);
    std::size_t top = 0;
    for (std::size_t i = 1; i < kLabelCount; ++i) {
        if (dist.p[i] > dist.p[top]) top = i;
    }
    double runner_up = -1.0;
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        if (i != top) runner_up = std::max(runner_up, dist.p[i]);
    }
    if (dist.p[top] > runner_up + delta) return kCanonicalLabels[top];
    return SentimentLabel::neutral;
}

// Trained meta-classifier g over concatenated per-model features.
struct MetaClassifier {
    LogisticModel model;
    std::vector<std::string> schema;  // concatenated, id-prefixed feature names
    std::array<SentimentLabel, kLabelCount> label_order = kCanonicalLabels;
    double lambda = 0.0;
};

// Feature-level fusion: applies g to the concatenated feature row. The
// row's schema must match the training-time snapshot exactly.
inline CategoryDistribution feature_fuse(const MetaClassifier& meta,
                                         const FeatureVector& concatenated) {
    if (concatenated.schema != meta.schema)
        throw Error(ErrorCategory::schema,
                    "feature schema does not match the meta-classifier snapshot "
                    "(different registry, order, or feature layout)");
    SparseVector x;
    x.entries.reserve(concatenated.values.size());
    for (std::size_t i = 0; i < concatenated.values.size(); ++i)
        x.entries.emplace_back(static_cast<int>(i), concatenated.values[i]);
    const std::vector<double> p = meta.model.probabilities(x);
    CategoryDistribution dist;
    for (std::size_t i = 0; i < kLabelCount; ++i)
        dist.p[static_cast<std::size_t>(label_index(meta.label_order[i]))] = p[i];
    return dist;
}

}  // namespace sentifuse
