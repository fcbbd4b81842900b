#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "sentifuse/error.hpp"

namespace sentifuse {

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

struct PrPoint {
    double recall = 0.0;
    double precision = 1.0;
};

// One (score, gold-is-positive) pair per evaluated text.
using ScoredLabel = std::pair<double, bool>;

namespace detail {

struct SweepCounts {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cumulative;  // (tp, fp) per threshold
    std::uint64_t positives = 0;
    std::uint64_t negatives = 0;
};

// Sweeps thresholds over distinct scores in descending order; equal scores
// collapse into one threshold.
inline SweepCounts threshold_sweep(std::span<const ScoredLabel> scored) {
    SweepCounts out;
    std::vector<ScoredLabel> sorted(scored.begin(), scored.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const ScoredLabel& a, const ScoredLabel& b) { return a.first > b.first; });
    for (const auto& [_, positive] : sorted) {
        if (positive) ++out.positives;
        else ++out.negatives;
    }
    if (out.positives == 0 || out.negatives == 0)
        throw Error(ErrorCategory::undefined_curve,
                    "curve needs at least one positive and one negative gold instance");
    std::uint64_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].second) ++tp;
        else ++fp;
        const bool last_of_group = i + 1 == sorted.size() || sorted[i + 1].first != sorted[i].first;
        if (last_of_group) out.cumulative.emplace_back(tp, fp);
    }
    return out;
}

}  // namespace detail

// One-vs-rest ROC on the positive category; starts at (0,0), ends at (1,1).
inline std::vector<RocPoint> roc_points(std::span<const ScoredLabel> scored) {
    const detail::SweepCounts sweep = detail::threshold_sweep(scored);
    std::vector<RocPoint> points;
    points.reserve(sweep.cumulative.size() + 1);
    points.push_back({0.0, 0.0});
    for (const auto& [tp, fp] : sweep.cumulative) {
        points.push_back({static_cast<double>(fp) / static_cast<double>(sweep.negatives),
                          static_cast<double>(tp) / static_cast<double>(sweep.positives)});
    }
    return points;
}

// Precision-recall points in increasing recall, anchored at (0, 1).
inline std::vector<PrPoint> pr_points(std::span<const ScoredLabel> scored) {
    const detail::SweepCounts sweep = detail::threshold_sweep(scored);
    std::vector<PrPoint> points;
    points.reserve(sweep.cumulative.size() + 1);
    points.push_back({0.0, 1.0});
    for (const auto& [tp, fp] : sweep.cumulative) {
        points.push_back({static_cast<double>(tp) / static_cast<double>(sweep.positives),
                          static_cast<double>(tp) / static_cast<double>(tp + fp)});
    }
    return points;
}

// Trapezoidal area under either curve.
inline double roc_auc(std::span<const RocPoint> curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        area += (curve[i].fpr - curve[i - 1].fpr) * (curve[i].tpr + curve[i - 1].tpr) / 2.0;
    }
    return area;
}

inline double pr_auc(std::span<const PrPoint> curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        area += (curve[i].recall - curve[i - 1].recall) *
                (curve[i].precision + curve[i - 1].precision) / 2.0;
    }
    return area;
}

}  // namespace sentifuse
