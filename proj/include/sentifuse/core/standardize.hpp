#pragma once

#include <cmath>
#include <string_view>

#include "sentifuse/core/types.hpp"

namespace sentifuse {

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// S(O_i): maps any raw model output onto a unified polarity distribution.
//   probabilities -> passed through
//   score s       -> {(1+s)/2, (1-s)/2}
//   logits        -> logistic squashing per component, then renormalized
//   label         -> one-hot (uniform for neutral)
// `context` names the producing model in validation errors.
inline PolarityDistribution standardize(const RawModelOutput& output,
                                        std::string_view context = {}) {
    validate_output(output, context);
    if (const auto* p = std::get_if<Probabilities>(&output)) {
        return {p->p_pos, p->p_neg};
    }
    if (const auto* s = std::get_if<Score>(&output)) {
        return {(1.0 + s->value) / 2.0, (1.0 - s->value) / 2.0};
    }
    if (const auto* l = std::get_if<Logits>(&output)) {
        const double a = logistic(l->v_pos);
        const double b = logistic(l->v_neg);
        const double z = a + b;
        if (z <= 0.0) return {0.5, 0.5};  // both logits deeply negative
        return {a / z, b / z};
    }
    switch (std::get<DiscreteLabel>(output).label) {
        case SentimentLabel::positive: return {1.0, 0.0};
        case SentimentLabel::negative: return {0.0, 1.0};
        case SentimentLabel::neutral: return {0.5, 0.5};
    }
    return {0.5, 0.5};
}

inline constexpr std::size_t kOutputFeatureCount = 9;

inline const std::vector<std::string>& output_feature_schema() {
    static const std::vector<std::string> schema = {
        "p_pos",      "p_neg",      "confidence", "margin",     "raw_scalar",
        "is_lexicon", "is_pattern", "is_machine_learning", "is_encoding"};
    return schema;
}

// phi_i(O_i): fixed 9-feature schema per model — the standardized pair,
// confidence, margin, a raw scalar (score / logit gap / probability gap)
// and a one-hot model-kind indicator. `dist` must be standardize(output).
inline FeatureVector extract_output_features(ModelKind kind, const RawModelOutput& output,
                                             const PolarityDistribution& dist) {
    double raw_scalar = 0.0;
    if (const auto* s = std::get_if<Score>(&output)) {
        raw_scalar = s->value;
    } else if (const auto* l = std::get_if<Logits>(&output)) {
        raw_scalar = l->v_pos - l->v_neg;
    } else {
        raw_scalar = dist.p_pos - dist.p_neg;
    }

    FeatureVector fv;
    fv.values = {dist.p_pos,        dist.p_neg, dist.confidence(), dist.margin(), raw_scalar,
                 0.0,               0.0,        0.0,               0.0};
    fv.values[5 + static_cast<std::size_t>(kind)] = 1.0;
    fv.schema = output_feature_schema();
    return fv;
}

}  // namespace sentifuse
