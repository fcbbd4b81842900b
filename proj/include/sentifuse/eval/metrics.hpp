#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sentifuse/core/types.hpp"
#include "sentifuse/error.hpp"

namespace sentifuse {

// Rows = gold, columns = predicted, both in canonical label order.
class ConfusionMatrix {
public:
    void add(SentimentLabel gold, SentimentLabel predicted, std::uint64_t count = 1) {
        counts_[static_cast<std::size_t>(label_index(gold))]
               [static_cast<std::size_t>(label_index(predicted))] += count;
        total_ += count;
    }

    std::uint64_t at(SentimentLabel gold, SentimentLabel predicted) const {
        return counts_[static_cast<std::size_t>(label_index(gold))]
                      [static_cast<std::size_t>(label_index(predicted))];
    }

    std::uint64_t total() const { return total_; }

    std::uint64_t gold_total(SentimentLabel l) const {
        std::uint64_t sum = 0;
        for (std::size_t p = 0; p < kLabelCount; ++p)
            sum += counts_[static_cast<std::size_t>(label_index(l))][p];
        return sum;
    }

    std::uint64_t predicted_total(SentimentLabel l) const {
        std::uint64_t sum = 0;
        for (std::size_t g = 0; g < kLabelCount; ++g)
            sum += counts_[g][static_cast<std::size_t>(label_index(l))];
        return sum;
    }

private:
    std::array<std::array<std::uint64_t, kLabelCount>, kLabelCount> counts_{};
    std::uint64_t total_ = 0;
};

struct PerLabelMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct MetricsReport {
    double accuracy = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    std::array<PerLabelMetrics, kLabelCount> per_label{};
};

// Standard definitions, macro-averaged over all three canonical labels.
// Zero-division convention: an undefined precision/recall/F1 contributes 0.
inline MetricsReport compute_metrics(const ConfusionMatrix& matrix) {
    if (matrix.total() == 0)
        throw Error(ErrorCategory::config, "cannot compute metrics for an empty confusion matrix");
    MetricsReport report;
    std::uint64_t diagonal = 0;
    for (SentimentLabel l : kCanonicalLabels) {
        const auto i = static_cast<std::size_t>(label_index(l));
        const std::uint64_t tp = matrix.at(l, l);
        diagonal += tp;
        const std::uint64_t predicted = matrix.predicted_total(l);
        const std::uint64_t gold = matrix.gold_total(l);
        PerLabelMetrics& m = report.per_label[i];
        m.precision = predicted > 0 ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
        m.recall = gold > 0 ? static_cast<double>(tp) / static_cast<double>(gold) : 0.0;
        m.f1 = (m.precision + m.recall) > 0.0
                   ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                   : 0.0;
        report.macro_precision += m.precision;
        report.macro_recall += m.recall;
        report.macro_f1 += m.f1;
    }
    report.accuracy = static_cast<double>(diagonal) / static_cast<double>(matrix.total());
    report.macro_precision /= static_cast<double>(kLabelCount);
    report.macro_recall /= static_cast<double>(kLabelCount);
    report.macro_f1 /= static_cast<double>(kLabelCount);
    return report;
}

}  // namespace sentifuse
