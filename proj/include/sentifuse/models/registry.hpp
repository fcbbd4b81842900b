#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sentifuse/core/standardize.hpp"
#include "sentifuse/core/types.hpp"
#include "sentifuse/error.hpp"
#include "sentifuse/models/external.hpp"
#include "sentifuse/models/lexicon.hpp"
#include "sentifuse/models/linear_model.hpp"
#include "sentifuse/models/patterns.hpp"

namespace sentifuse {

class Model {
public:
    virtual ~Model() = default;
    virtual RawModelOutput predict(const std::string& text_id,
                                   const std::string& normalized_text) const = 0;
};

class LexiconModel final : public Model {
public:
    explicit LexiconModel(PolarityLexicon lexicon) : lexicon_(std::move(lexicon)) {}
    RawModelOutput predict(const std::string&, const std::string& text) const override {
        return lexicon_predict(lexicon_, text);
    }
    const PolarityLexicon& lexicon() const { return lexicon_; }

private:
    PolarityLexicon lexicon_;
};

class PatternModel final : public Model {
public:
    explicit PatternModel(PatternSet set) : set_(std::move(set)) {}
    RawModelOutput predict(const std::string&, const std::string& text) const override {
        return pattern_predict(set_, text);
    }

private:
    PatternSet set_;
};

class MachineLearningModel final : public Model {
public:
    explicit MachineLearningModel(TfidfLinearModel model) : model_(std::move(model)) {}
    RawModelOutput predict(const std::string&, const std::string& text) const override {
        return model_.predict(text);
    }
    const TfidfLinearModel& model() const { return model_; }

private:
    TfidfLinearModel model_;
};

class ExternalModel final : public Model {
public:
    ExternalModel(std::string model_id, ExternalPredictionTable table)
        : model_id_(std::move(model_id)), table_(std::move(table)) {}
    RawModelOutput predict(const std::string& text_id, const std::string&) const override {
        return external_predict(table_, model_id_, text_id);
    }

private:
    std::string model_id_;
    ExternalPredictionTable table_;
};

struct RegistryEntry {
    std::string id;
    ModelKind kind;
    std::shared_ptr<const Model> model;
};

// Raw output, its standardized distribution and the per-model features
// for one text under one model.
struct ModelView {
    RawModelOutput raw;
    PolarityDistribution dist;
    FeatureVector features;
};

// Ordered pool M = {M_1..M_n}. The order is fixed at configuration time;
// feature concatenation, fusion weights and artifact snapshots depend on it.
class ModelRegistry {
public:
    void add(std::string id, ModelKind kind, std::shared_ptr<const Model> model) {
        for (const auto& e : entries_) {
            if (e.id == id)
                throw Error(ErrorCategory::config, "duplicate model id '" + id + "'");
        }
        entries_.push_back({std::move(id), kind, std::move(model)});
    }

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const RegistryEntry& operator[](std::size_t i) const { return entries_[i]; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    std::vector<ModelKind> kinds() const {
        std::vector<ModelKind> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e.kind);
        return out;
    }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e.id);
        return out;
    }

    // Runs every model on one text: raw output (validated, errors name the
    // model), standardized distribution, per-model features.
    std::vector<ModelView> run(const std::string& text_id,
                               const std::string& normalized_text) const {
        std::vector<ModelView> views;
        views.reserve(entries_.size());
        for (const auto& entry : entries_) {
            ModelView view;
            view.raw = entry.model->predict(text_id, normalized_text);
            view.dist = standardize(view.raw, entry.id);
            view.features = extract_output_features(entry.kind, view.raw, view.dist);
            views.push_back(std::move(view));
        }
        return views;
    }

    // Concatenates per-model features in registry order; schema names are
    // prefixed with the model id so a mismatched registry is detectable.
    FeatureVector concat_features(const std::vector<ModelView>& views) const {
        if (views.size() != entries_.size())
            throw Error(ErrorCategory::schema, "model view count does not match registry size");
        FeatureVector out;
        for (std::size_t i = 0; i < views.size(); ++i) {
            const FeatureVector& fv = views[i].features;
            for (std::size_t j = 0; j < fv.size(); ++j) {
                out.values.push_back(fv.values[j]);
                out.schema.push_back(entries_[i].id + "." + fv.schema[j]);
            }
        }
        return out;
    }

private:
    std::vector<RegistryEntry> entries_;
};

}  // namespace sentifuse
