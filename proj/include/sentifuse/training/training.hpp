#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sentifuse/core/text_characteristics.hpp"
#include "sentifuse/core/types.hpp"
#include "sentifuse/error.hpp"
#include "sentifuse/eval/metrics.hpp"
#include "sentifuse/fusion/fusion.hpp"
#include "sentifuse/models/registry.hpp"

namespace sentifuse {

// Everything training needs about a labeled split, precomputed once:
// standardized distributions and concatenated features per text in
// registry order, plus gold labels and text characteristics.
struct ValidationBundle {
    std::vector<std::vector<PolarityDistribution>> dists;  // [text][model]
    std::vector<FeatureVector> features;                   // concatenated, id-prefixed
    std::vector<SentimentLabel> gold;
    std::vector<TextCharacteristics> characteristics;

    std::size_t size() const { return gold.size(); }

    void check_aligned() const {
        if (dists.size() != gold.size() || features.size() != gold.size() ||
            characteristics.size() != gold.size())
            throw Error(ErrorCategory::config, "validation bundle lists are not aligned");
    }
};

// Number of grid points per axis for the exhaustive search; beyond this
// pool size the tuner switches to coordinate ascent.
inline constexpr std::size_t kExhaustiveGridMaxModels = 4;

namespace detail {

inline double bundle_macro_f1(const ValidationBundle& bundle, std::span<const double> weights,
                              double delta) {
    ConfusionMatrix matrix;
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        const PolarityDistribution fused = weighted_merge(weights, bundle.dists[i]);
        matrix.add(bundle.gold[i], classify(fused, delta));
    }
    return compute_metrics(matrix).macro_f1;
}

inline double weight_variance(std::span<const double> w) {
    double mean = 0.0;
    for (double v : w) mean += v;
    mean /= static_cast<double>(w.size());
    double var = 0.0;
    for (double v : w) var += (v - mean) * (v - mean);
    return var / static_cast<double>(w.size());
}

// Candidate comparison for the tuner: higher macro-F1 wins, then lower
// variance (most uniform), then the earlier (lexicographically smaller,
// because enumeration is lexicographic) candidate stands.
inline bool tuning_improves(double f1, double var, double best_f1, double best_var) {
    if (f1 > best_f1) return true;
    if (f1 < best_f1) return false;
    return var < best_var;
}

// Fusion weights are scale-free; report the winner scaled so its largest
// component is 1. A single-model pool therefore tunes to exactly [1.0].
inline std::vector<double> canonicalize_weights(std::vector<double> w) {
    double top = 0.0;
    for (double v : w) top = std::max(top, v);
    if (top > 0.0) {
        for (double& v : w) v /= top;
    }
    return w;
}

}  // namespace detail

// Tunes decision-fusion weights on a labeled bundle by maximizing the
// macro-F1 of classify(decision_fuse(w, .), delta). Pools of up to four
// models get an exact lexicographic grid search over {0, step, ..., 1}^n
// minus the all-zero vector; larger pools use deterministic coordinate
// ascent from equal weights (approximate, never worse than equal weights).
inline FusionWeights tune_decision_weights(const ValidationBundle& bundle, double delta,
                                           double step = 0.1) {
    bundle.check_aligned();
    if (bundle.size() == 0)
        throw Error(ErrorCategory::config, "cannot tune weights on an empty bundle");
    validate_delta(delta);
    if (!(step > 0.0) || step > 1.0)
        throw Error(ErrorCategory::config, "grid step must lie in (0,1]");
    const double levels_real = 1.0 / step;
    const auto levels = static_cast<std::size_t>(std::llround(levels_real));
    if (std::abs(levels_real - static_cast<double>(levels)) > 1e-9)
        throw Error(ErrorCategory::config, "grid step must divide 1 evenly");

    const std::size_t n = bundle.dists.front().size();
    if (n == 0) throw Error(ErrorCategory::config, "bundle contains no model outputs");
    for (const auto& d : bundle.dists) {
        if (d.size() != n)
            throw Error(ErrorCategory::config, "bundle rows disagree on model count");
    }

    auto level_value = [&](std::size_t idx) { return static_cast<double>(idx) * step; };

    std::vector<double> best;
    double best_f1 = -1.0, best_var = 0.0;

    if (n <= kExhaustiveGridMaxModels) {
        std::vector<std::size_t> idx(n, 0);
        std::vector<double> w(n, 0.0);
        while (true) {
            bool all_zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                w[i] = level_value(idx[i]);
                if (idx[i] != 0) all_zero = false;
            }
            if (!all_zero) {
                const double f1 = detail::bundle_macro_f1(bundle, w, delta);
                const double var = detail::weight_variance(w);
                if (best.empty() || detail::tuning_improves(f1, var, best_f1, best_var)) {
                    best = w;
                    best_f1 = f1;
                    best_var = var;
                }
            }
            // odometer, last axis fastest = lexicographic ascent
            std::size_t pos = n;
            bool wrapped = true;
            while (pos-- > 0) {
                if (idx[pos] < levels) {
                    ++idx[pos];
                    wrapped = false;
                    break;
                }
                idx[pos] = 0;
            }
            if (wrapped) break;  // every axis rolled over: enumeration done
        }
        return FusionWeights::create(detail::canonicalize_weights(std::move(best)));
    }

    // coordinate ascent from equal weights, same comparison rule per move
    std::vector<double> w(n, 1.0);
    best_f1 = detail::bundle_macro_f1(bundle, w, delta);
    best_var = detail::weight_variance(w);
    for (int pass = 0; pass < 50; ++pass) {
        bool changed = false;
        for (std::size_t axis = 0; axis < n; ++axis) {
            const double original = w[axis];
            double chosen = original;
            for (std::size_t l = 0; l <= levels; ++l) {
                w[axis] = level_value(l);
                bool all_zero = true;
                for (double v : w) {
                    if (v != 0.0) {
                        all_zero = false;
                        break;
                    }
                }
                if (all_zero) continue;
                const double f1 = detail::bundle_macro_f1(bundle, w, delta);
                const double var = detail::weight_variance(w);
                if (detail::tuning_improves(f1, var, best_f1, best_var)) {
                    best_f1 = f1;
                    best_var = var;
                    chosen = w[axis];
                }
            }
            w[axis] = chosen;
            if (chosen != original) changed = true;
        }
        if (!changed) break;
    }
    return FusionWeights::create(detail::canonicalize_weights(std::move(w)));
}

// Fits the feature-fusion meta-classifier on the bundle's concatenated
// features, using the same regularized multinomial procedure as the linear model.
inline MetaClassifier train_meta_classifier(const ValidationBundle& bundle,
                                            const LogisticTrainConfig& config = {}) {
    bundle.check_aligned();
    if (bundle.size() == 0)
        throw Error(ErrorCategory::config, "cannot train a meta-classifier on an empty bundle");
    const std::vector<std::string>& schema = bundle.features.front().schema;
    std::vector<SparseVector> rows;
    rows.reserve(bundle.size());
    std::vector<int> y;
    y.reserve(bundle.size());
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        const FeatureVector& fv = bundle.features[i];
        if (fv.schema != schema)
            throw Error(ErrorCategory::schema, "bundle feature schemas are not identical");
        SparseVector x;
        x.entries.reserve(fv.values.size());
        for (std::size_t j = 0; j < fv.values.size(); ++j)
            x.entries.emplace_back(static_cast<int>(j), fv.values[j]);
        rows.push_back(std::move(x));
        y.push_back(label_index(bundle.gold[i]));
    }
    LogisticTrainResult fit = logistic_train(rows, y, static_cast<int>(kLabelCount),
                                             static_cast<int>(schema.size()), config);
    MetaClassifier meta;
    meta.model = std::move(fit.model);
    meta.schema = schema;
    meta.label_order = kCanonicalLabels;
    meta.lambda = config.lambda;
    return meta;
}

// The fixed default rule set: encoding models gain weight under negation
// and mixed emotions, lexicons gain on short texts and lose under negation.
inline std::vector<AdaptiveRule> default_adaptive_rules() {
    return {
        {RuleCondition::has_negation, 0, ModelKind::encoding, 1.5},
        {RuleCondition::mixed_emotions, 0, ModelKind::encoding, 1.5},
        {RuleCondition::short_text, 0, ModelKind::lexicon, 1.5},
        {RuleCondition::has_negation, 0, ModelKind::lexicon, 0.75},
    };
}

// Runs the registry over labeled records and packs the result for training.
template <typename RecordRange>
ValidationBundle make_bundle(const ModelRegistry& registry, const RecordRange& records,
                             const CharacteristicsConfig& characteristics_config = {}) {
    ValidationBundle bundle;
    for (const auto& record : records) {
        const std::vector<ModelView> views = registry.run(record.id, record.normalized);
        std::vector<PolarityDistribution> dists;
        dists.reserve(views.size());
        for (const auto& v : views) dists.push_back(v.dist);
        bundle.dists.push_back(std::move(dists));
        bundle.features.push_back(registry.concat_features(views));
        bundle.gold.push_back(record.label);
        bundle.characteristics.push_back(
            extract_text_characteristics(record.normalized, characteristics_config));
    }
    return bundle;
}

}  // namespace sentifuse
