#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentifuse/core/text_characteristics.hpp"
#include "sentifuse/error.hpp"
#include "sentifuse/eval/curves.hpp"
#include "sentifuse/eval/metrics.hpp"
#include "sentifuse/fusion/fusion.hpp"
#include "sentifuse/models/registry.hpp"

namespace sentifuse {

enum class Strategy : int {
    best_individual = 0,
    simple_average = 1,
    confidence_weighted = 2,
    majority_vote = 3,
    median_average = 4,
    max_confidence = 5,
    decision_fusion = 6,
    feature_fusion = 7,
    adaptive_fusion = 8,
};

inline constexpr std::array<Strategy, 9> kAllStrategies = {
    Strategy::best_individual, Strategy::simple_average, Strategy::confidence_weighted,
    Strategy::majority_vote,   Strategy::median_average, Strategy::max_confidence,
    Strategy::decision_fusion, Strategy::feature_fusion, Strategy::adaptive_fusion,
};

inline const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::best_individual: return "best_individual";
        case Strategy::simple_average: return "simple_average";
        case Strategy::confidence_weighted: return "confidence_weighted";
        case Strategy::majority_vote: return "majority_vote";
        case Strategy::median_average: return "median_average";
        case Strategy::max_confidence: return "max_confidence";
        case Strategy::decision_fusion: return "decision_fusion";
        case Strategy::feature_fusion: return "feature_fusion";
        case Strategy::adaptive_fusion: return "adaptive_fusion";
    }
    return "?";
}

inline Strategy strategy_from_string(std::string_view s) {
    for (Strategy strategy : kAllStrategies) {
        if (s == to_string(strategy)) return strategy;
    }
    throw Error(ErrorCategory::config, "unknown strategy '" + std::string(s) + "'");
}

// Trained/configured state the strategies draw on at evaluation time.
struct StrategyArtifacts {
    double delta = 0.1;
    std::optional<FusionWeights> weights;           // decision_fusion
    std::optional<MetaClassifier> meta;             // feature_fusion
    std::vector<AdaptiveRule> rules;                // adaptive_fusion
};

// Precomputed per-record model outputs for the evaluated split.
struct RecordInputs {
    std::vector<PolarityDistribution> dists;
    FeatureVector concat;
    TextCharacteristics characteristics;
    std::vector<SentimentLabel> model_labels;  // per-model classify(dist, delta)
};

struct StrategyPredictions {
    Strategy strategy = Strategy::simple_average;
    std::string detail;  // best_individual: winning model id
    std::vector<SentimentLabel> labels;
    std::vector<double> positive_scores;  // one-vs-rest score on positive
};

struct StrategyRow {
    Strategy strategy = Strategy::simple_average;
    std::string detail;
    MetricsReport metrics;
};

struct ComparisonResult {
    std::vector<StrategyRow> rows;
    std::vector<StrategyPredictions> predictions;  // aligned with rows
    std::vector<SentimentLabel> gold;
    std::vector<TextCharacteristics> characteristics;
};

template <typename RecordRange>
std::vector<RecordInputs> prepare_inputs(const ModelRegistry& registry,
                                         const RecordRange& records, double delta,
                                         const CharacteristicsConfig& char_config = {}) {
    std::vector<RecordInputs> inputs;
    for (const auto& record : records) {
        const std::vector<ModelView> views = registry.run(record.id, record.normalized);
        RecordInputs in;
        in.dists.reserve(views.size());
        for (const auto& v : views) in.dists.push_back(v.dist);
        in.concat = registry.concat_features(views);
        in.characteristics = extract_text_characteristics(record.normalized, char_config);
        in.model_labels.reserve(views.size());
        for (const auto& v : views) in.model_labels.push_back(classify(v.dist, delta));
        inputs.push_back(std::move(in));
    }
    return inputs;
}

namespace detail {

inline MetricsReport metrics_for(std::span<const SentimentLabel> predicted,
                                 std::span<const SentimentLabel> gold) {
    ConfusionMatrix matrix;
    for (std::size_t i = 0; i < predicted.size(); ++i) matrix.add(gold[i], predicted[i]);
    return compute_metrics(matrix);
}

inline StrategyPredictions best_individual_predictions(const ModelRegistry& registry,
                                                       std::span<const RecordInputs> inputs,
                                                       std::span<const SentimentLabel> gold) {
    if (registry.empty()) throw Error(ErrorCategory::config, "model pool is empty");
    std::size_t best = 0;
    double best_f1 = -1.0;
    for (std::size_t m = 0; m < registry.size(); ++m) {
        std::vector<SentimentLabel> labels;
        labels.reserve(inputs.size());
        for (const auto& in : inputs) labels.push_back(in.model_labels[m]);
        const double f1 = metrics_for(labels, gold).macro_f1;
        if (f1 > best_f1) {
            best_f1 = f1;
            best = m;
        }
    }
    StrategyPredictions out;
    out.strategy = Strategy::best_individual;
    out.detail = registry[best].id;
    for (const auto& in : inputs) {
        out.labels.push_back(in.model_labels[best]);
        out.positive_scores.push_back(in.dists[best].p_pos);
    }
    return out;
}

}  // namespace detail

// Runs one strategy over prepared inputs, yielding labels and a positive
// one-vs-rest score per record.
inline StrategyPredictions run_strategy(Strategy strategy, const ModelRegistry& registry,
                                        std::span<const RecordInputs> inputs,
                                        std::span<const SentimentLabel> gold,
                                        const StrategyArtifacts& artifacts) {
    const double delta = artifacts.delta;
    StrategyPredictions out;
    out.strategy = strategy;

    if (strategy == Strategy::best_individual)
        return detail::best_individual_predictions(registry, inputs, gold);

    const std::vector<ModelKind> kinds = registry.kinds();
    for (const auto& in : inputs) {
        switch (strategy) {
            case Strategy::simple_average: {
                const PolarityDistribution d = simple_average(in.dists);
                out.labels.push_back(classify(d, delta));
                out.positive_scores.push_back(d.p_pos);
                break;
            }
            case Strategy::confidence_weighted: {
                const PolarityDistribution d = confidence_weighted(in.dists);
                out.labels.push_back(classify(d, delta));
                out.positive_scores.push_back(d.p_pos);
                break;
            }
            case Strategy::majority_vote: {
                out.labels.push_back(majority_vote(in.model_labels, in.dists));
                std::size_t pos_votes = 0;
                for (SentimentLabel l : in.model_labels)
                    if (l == SentimentLabel::positive) ++pos_votes;
                out.positive_scores.push_back(static_cast<double>(pos_votes) /
                                              static_cast<double>(in.model_labels.size()));
                break;
            }
            case Strategy::median_average: {
                const PolarityDistribution d = median_average(in.dists);
                out.labels.push_back(classify(d, delta));
                out.positive_scores.push_back(d.p_pos);
                break;
            }
            case Strategy::max_confidence: {
                const PolarityDistribution d = max_confidence(in.dists);
                out.labels.push_back(classify(d, delta));
                out.positive_scores.push_back(d.p_pos);
                break;
            }
            case Strategy::decision_fusion: {
                if (!artifacts.weights)
                    throw Error(ErrorCategory::state,
                                "decision_fusion requested but no trained weights are loaded");
                const PolarityDistribution d = decision_fuse(*artifacts.weights, in.dists);
                out.labels.push_back(classify(d, delta));
                out.positive_scores.push_back(d.p_pos);
                break;
            }
            case Strategy::feature_fusion: {
                if (!artifacts.meta)
                    throw Error(ErrorCategory::state,
                                "feature_fusion requested but no trained meta-classifier is loaded");
                const CategoryDistribution d = feature_fuse(*artifacts.meta, in.concat);
                out.labels.push_back(classify_category(d, delta));
                out.positive_scores.push_back(d.of(SentimentLabel::positive));
                break;
            }
            case Strategy::adaptive_fusion: {
                const PolarityDistribution d =
                    adaptive_fuse(artifacts.rules, in.characteristics, kinds, in.dists);
                out.labels.push_back(classify(d, delta));
                out.positive_scores.push_back(d.p_pos);
                break;
            }
            case Strategy::best_individual:
                break;  // handled above
        }
    }
    return out;
}

// One MetricsReport row per requested strategy, in the order given.
template <typename RecordRange>
ComparisonResult compare_strategies(const ModelRegistry& registry, const RecordRange& records,
                                    std::span<const Strategy> strategies,
                                    const StrategyArtifacts& artifacts,
                                    const CharacteristicsConfig& char_config = {}) {
    ComparisonResult result;
    for (const auto& record : records) result.gold.push_back(record.label);
    if (result.gold.empty())
        throw Error(ErrorCategory::config, "cannot compare strategies on an empty split");
    const std::vector<RecordInputs> inputs =
        prepare_inputs(registry, records, artifacts.delta, char_config);
    for (const auto& in : inputs) result.characteristics.push_back(in.characteristics);

    for (Strategy strategy : strategies) {
        StrategyPredictions predictions =
            run_strategy(strategy, registry, inputs, result.gold, artifacts);
        StrategyRow row;
        row.strategy = strategy;
        row.detail = predictions.detail;
        row.metrics = detail::metrics_for(predictions.labels, result.gold);
        result.rows.push_back(std::move(row));
        result.predictions.push_back(std::move(predictions));
    }
    return result;
}

// Per-characteristic accuracy buckets (Fig.-3-style). Membership is a
// function of the text alone; a record may land in several buckets.
struct BucketReport {
    std::string bucket;
    std::size_t count = 0;
    double accuracy = 0.0;
};

inline std::vector<BucketReport> characteristic_breakdown(
    std::span<const TextCharacteristics> characteristics,
    std::span<const SentimentLabel> predicted, std::span<const SentimentLabel> gold,
    std::size_t complexity_threshold = 4) {
    if (characteristics.size() != predicted.size() || predicted.size() != gold.size())
        throw Error(ErrorCategory::config, "breakdown inputs are not aligned");
    struct Bucket {
        const char* name;
        std::size_t count = 0;
        std::size_t correct = 0;
    };
    std::array<Bucket, 5> buckets = {
        Bucket{"negation"}, Bucket{"short"}, Bucket{"long"}, Bucket{"mixed_emotions"},
        Bucket{"complex"}};
    for (std::size_t i = 0; i < characteristics.size(); ++i) {
        const TextCharacteristics& c = characteristics[i];
        const bool correct = predicted[i] == gold[i];
        auto tally = [&](std::size_t b) {
            ++buckets[b].count;
            if (correct) ++buckets[b].correct;
        };
        if (c.has_negation) tally(0);
        if (c.length_bucket == LengthBucket::short_text) tally(1);
        if (c.length_bucket == LengthBucket::long_text) tally(2);
        if (c.mixed_emotions) tally(3);
        if (c.emotional_complexity >= complexity_threshold || c.has_contrast_connective) tally(4);
    }
    std::vector<BucketReport> out;
    for (const auto& b : buckets) {
        if (b.count == 0) continue;  // empty buckets are absent, not zero
        out.push_back({b.name, b.count,
                       static_cast<double>(b.correct) / static_cast<double>(b.count)});
    }
    return out;
}

}  // namespace sentifuse
