#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sentifuse/core/types.hpp"
#include "sentifuse/error.hpp"
#include "sentifuse/models/logistic_regression.hpp"
#include "sentifuse/models/tfidf.hpp"

namespace sentifuse {

// TF-IDF features + multinomial logistic classifier over the three
// canonical labels. Class rows follow canonical label order, so the
// positive/negative decision scores feed the standardization layer as
// logits while a 3-class distribution stays available directly.
class TfidfLinearModel {
public:
    TfidfLinearModel() = default;
    TfidfLinearModel(TfidfVocabulary vocab, LogisticModel classifier)
        : vocab_(std::move(vocab)), classifier_(std::move(classifier)), trained_(true) {}

    static TfidfLinearModel train(const std::vector<std::string>& texts,
                                  const std::vector<SentimentLabel>& labels, int min_df,
                                  const LogisticTrainConfig& config) {
        if (texts.size() != labels.size())
            throw Error(ErrorCategory::config, "texts and labels must align");
        TfidfVocabulary vocab = tfidf_fit(texts, min_df);
        std::vector<SparseVector> rows;
        rows.reserve(texts.size());
        for (const auto& text : texts) rows.push_back(tfidf_transform(vocab, text));
        std::vector<int> y;
        y.reserve(labels.size());
        for (SentimentLabel l : labels) y.push_back(label_index(l));
        LogisticTrainResult fit = logistic_train(rows, y, static_cast<int>(kLabelCount),
                                                 static_cast<int>(vocab.size()), config);
        TfidfLinearModel model(std::move(vocab), std::move(fit.model));
        model.final_loss_ = fit.loss_history.back();
        model.train_iterations_ = fit.iterations;
        return model;
    }

    bool trained() const { return trained_; }

    RawModelOutput predict(std::string_view normalized_text) const {
        require_trained();
        const std::vector<double> s =
            classifier_.scores(tfidf_transform(vocab_, normalized_text));
        return Logits{s[static_cast<std::size_t>(label_index(SentimentLabel::positive))],
                      s[static_cast<std::size_t>(label_index(SentimentLabel::negative))]};
    }

    CategoryDistribution category_distribution(std::string_view normalized_text) const {
        require_trained();
        const std::vector<double> p =
            classifier_.probabilities(tfidf_transform(vocab_, normalized_text));
        CategoryDistribution dist;
        for (std::size_t i = 0; i < kLabelCount; ++i) dist.p[i] = p[i];
        return dist;
    }

    const TfidfVocabulary& vocabulary() const { return vocab_; }
    const LogisticModel& classifier() const { return classifier_; }
    double final_loss() const { return final_loss_; }
    int train_iterations() const { return train_iterations_; }

private:
    void require_trained() const {
        if (!trained_)
            throw Error(ErrorCategory::state, "tfidf linear model used before training");
    }

    TfidfVocabulary vocab_;
    LogisticModel classifier_;
    bool trained_ = false;
    double final_loss_ = 0.0;
    int train_iterations_ = 0;
};

}  // namespace sentifuse
