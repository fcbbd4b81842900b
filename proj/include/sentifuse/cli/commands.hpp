#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sentifuse/cli/artifact.hpp"
#include "sentifuse/cli/config.hpp"
#include "sentifuse/data/dataset.hpp"
#include "sentifuse/eval/curves.hpp"
#include "sentifuse/eval/pipeline.hpp"
#include "sentifuse/eval/split.hpp"
#include "sentifuse/numeric_io.hpp"
#include "sentifuse/training/training.hpp"

namespace sentifuse {

namespace detail {

inline std::vector<std::pair<std::string, ModelKind>> registry_snapshot(
    const ExperimentConfig& config) {
    std::vector<std::pair<std::string, ModelKind>> snapshot;
    snapshot.reserve(config.models.size());
    for (const auto& m : config.models) snapshot.emplace_back(m.id, m.kind);
    return snapshot;
}

inline bool wants_strategy(const ExperimentConfig& config, Strategy s) {
    if (config.predict_strategy == s) return true;
    for (Strategy t : config.strategies)
        if (t == s) return true;
    return false;
}

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCategory::config, "cannot write '" + path.string() + "'");
    out << contents;
}

}  // namespace detail

// Builds the runtime pool. Machine-learning models come from `trained`
// (fitted during train, or reloaded from the artifact).
inline ModelRegistry build_registry(const ExperimentConfig& config,
                                    const std::map<std::string, TfidfLinearModel>& trained) {
    ModelRegistry registry;
    for (const auto& mc : config.models) {
        std::shared_ptr<const Model> model;
        if (mc.is_external()) {
            model = std::make_shared<ExternalModel>(mc.id, load_prediction_file(mc.predictions_file));
        } else if (mc.kind == ModelKind::lexicon) {
            PolarityLexicon lexicon = mc.lexicon_file.empty() ? default_polarity_lexicon()
                                                              : load_lexicon_file(mc.lexicon_file);
            lexicon.negation_window = mc.negation_window;
            if (!mc.intensifiers.empty()) lexicon.intensifiers = mc.intensifiers;
            model = std::make_shared<LexiconModel>(std::move(lexicon));
        } else if (mc.kind == ModelKind::pattern) {
            model = std::make_shared<PatternModel>(
                mc.pattern_file.empty() ? default_pattern_set() : load_pattern_file(mc.pattern_file));
        } else if (mc.kind == ModelKind::machine_learning) {
            auto it = trained.find(mc.id);
            if (it == trained.end())
                throw Error(ErrorCategory::state,
                            "machine-learning model '" + mc.id + "' has no trained state");
            model = std::make_shared<MachineLearningModel>(it->second);
        } else {
            throw Error(ErrorCategory::config, "model '" + mc.id + "' cannot be built natively");
        }
        registry.add(mc.id, mc.kind, std::move(model));
    }
    return registry;
}

// train: fit TF-IDF linear models on the train split, tune decision weights
// and fit the meta-classifier on the validation split, write the artifact.
inline TrainedArtifact cmd_train(const ExperimentConfig& config, const std::string& out_dir,
                                 std::ostream& log) {
    const std::vector<TextRecord> records =
        load_dataset(config.dataset.path, config.dataset.format, config.dataset.labels);
    const SplitResult split = stratified_split(records, config.ratios, config.seed);
    log << "dataset: " << records.size() << " records -> train " << split.train.size()
        << ", validation " << split.validation.size() << ", test " << split.test.size() << '\n';

    std::map<std::string, TfidfLinearModel> trained;
    for (const auto& mc : config.models) {
        if (mc.kind != ModelKind::machine_learning || mc.is_external()) continue;
        std::vector<std::string> texts;
        std::vector<SentimentLabel> labels;
        texts.reserve(split.train.size());
        for (const auto& r : split.train) {
            texts.push_back(r.normalized);
            labels.push_back(r.label);
        }
        LogisticTrainConfig tc = mc.train;
        tc.seed = config.seed;
        TfidfLinearModel model = TfidfLinearModel::train(texts, labels, mc.min_df, tc);
        log << "model " << mc.id << ": vocabulary " << model.vocabulary().size()
            << " terms, " << model.train_iterations() << " iterations, final loss "
            << format_double(model.final_loss()) << '\n';
        trained.emplace(mc.id, std::move(model));
    }

    const ModelRegistry registry = build_registry(config, trained);

    TrainedArtifact artifact;
    artifact.config_digest = config.digest;
    artifact.registry = detail::registry_snapshot(config);
    artifact.delta = config.delta;
    artifact.rules = config.adaptive_rules;
    artifact.tfidf_models = std::move(trained);

    const bool need_weights = detail::wants_strategy(config, Strategy::decision_fusion);
    const bool need_meta = detail::wants_strategy(config, Strategy::feature_fusion);
    if (need_weights || need_meta) {
        const ValidationBundle bundle =
            make_bundle(registry, split.validation, config.characteristics);
        if (need_weights) {
            artifact.weights = tune_decision_weights(bundle, config.delta, config.grid_step);
            std::ostringstream w;
            for (std::size_t i = 0; i < artifact.weights->values.size(); ++i) {
                if (i) w << ' ';
                w << registry[i].id << '=' << format_double(artifact.weights->values[i]);
            }
            log << "decision weights: " << w.str() << '\n';
        }
        if (need_meta) {
            artifact.meta = train_meta_classifier(bundle, config.training);
            log << "meta-classifier: " << artifact.meta->schema.size() << " features, lambda "
                << format_double(artifact.meta->lambda) << '\n';
        }
    }

    std::filesystem::create_directories(out_dir);
    const std::string path = (std::filesystem::path(out_dir) / "artifact.txt").string();
    save_artifact(artifact, path);
    log << "artifact written to " << path << '\n';
    return artifact;
}

struct EvaluateOutput {
    ComparisonResult comparison;
    std::vector<std::string> files_written;
};

// evaluate: strategy comparison + per-characteristic buckets on the test
// split; optional one-vs-rest ROC/PR point files with AUCs in the summary.
inline EvaluateOutput cmd_evaluate(const ExperimentConfig& config, const TrainedArtifact& artifact,
                                   const std::string& out_dir, std::ostream& log) {
    check_artifact_compatible(artifact, detail::registry_snapshot(config));
    const ModelRegistry registry = build_registry(config, artifact.tfidf_models);

    const std::vector<TextRecord> records =
        load_dataset(config.dataset.path, config.dataset.format, config.dataset.labels);
    const SplitResult split = stratified_split(records, config.ratios, config.seed);

    StrategyArtifacts strategy_artifacts;
    strategy_artifacts.delta = artifact.delta;
    strategy_artifacts.weights = artifact.weights;
    strategy_artifacts.meta = artifact.meta;
    strategy_artifacts.rules = artifact.rules;

    EvaluateOutput output;
    output.comparison = compare_strategies(registry, split.test, config.strategies,
                                           strategy_artifacts, config.characteristics);
    const ComparisonResult& cmp = output.comparison;

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path out_path(out_dir);

    // human-readable comparison table
    std::ostringstream table;
    table << "strategy\tdetail\taccuracy\tmacro_precision\tmacro_recall\tmacro_f1\n";
    table << std::fixed << std::setprecision(6);
    for (const auto& row : cmp.rows) {
        table << to_string(row.strategy) << '\t' << row.detail << '\t' << row.metrics.accuracy
              << '\t' << row.metrics.macro_precision << '\t' << row.metrics.macro_recall << '\t'
              << row.metrics.macro_f1 << '\n';
    }
    detail::write_file(out_path / "comparison.tsv", table.str());
    output.files_written.push_back("comparison.tsv");
    log << table.str();

    // curve emission decision
    bool emit_curves = false;
    if (config.curves == "always") {
        emit_curves = true;
    } else if (config.curves == "auto") {
        bool has_pos = false, has_neg = false, has_neu = false;
        for (SentimentLabel l : cmp.gold) {
            has_pos |= l == SentimentLabel::positive;
            has_neg |= l == SentimentLabel::negative;
            has_neu |= l == SentimentLabel::neutral;
        }
        emit_curves = has_pos && has_neg && !has_neu;  // effectively binary gold
    }

    // machine-readable summary: strategy \t metric \t value
    std::ostringstream summary;
    for (std::size_t r = 0; r < cmp.rows.size(); ++r) {
        const StrategyRow& row = cmp.rows[r];
        const char* name = to_string(row.strategy);
        auto emit = [&](const std::string& metric, double value) {
            summary << name << '\t' << metric << '\t' << format_double(value) << '\n';
        };
        emit("accuracy", row.metrics.accuracy);
        emit("macro_precision", row.metrics.macro_precision);
        emit("macro_recall", row.metrics.macro_recall);
        emit("macro_f1", row.metrics.macro_f1);
        for (SentimentLabel l : kCanonicalLabels) {
            const auto& m = row.metrics.per_label[static_cast<std::size_t>(label_index(l))];
            emit(std::string("precision_") + to_string(l), m.precision);
            emit(std::string("recall_") + to_string(l), m.recall);
            emit(std::string("f1_") + to_string(l), m.f1);
        }
        if (emit_curves) {
            std::vector<ScoredLabel> scored;
            scored.reserve(cmp.gold.size());
            for (std::size_t i = 0; i < cmp.gold.size(); ++i)
                scored.emplace_back(cmp.predictions[r].positive_scores[i],
                                    cmp.gold[i] == SentimentLabel::positive);
            const std::vector<RocPoint> roc = roc_points(scored);
            const std::vector<PrPoint> pr = pr_points(scored);
            emit("roc_auc", roc_auc(roc));
            emit("pr_auc", pr_auc(pr));

            std::ostringstream roc_file, pr_file;
            for (const auto& p : roc)
                roc_file << format_double(p.fpr) << '\t' << format_double(p.tpr) << '\n';
            for (const auto& p : pr)
                pr_file << format_double(p.recall) << '\t' << format_double(p.precision) << '\n';
            const std::string roc_name = std::string("roc_") + name + ".tsv";
            const std::string pr_name = std::string("pr_") + name + ".tsv";
            detail::write_file(out_path / roc_name, roc_file.str());
            detail::write_file(out_path / pr_name, pr_file.str());
            output.files_written.push_back(roc_name);
            output.files_written.push_back(pr_name);
        }
    }
    detail::write_file(out_path / "summary.tsv", summary.str());
    output.files_written.push_back("summary.tsv");

    // per-characteristic buckets
    std::ostringstream buckets;
    buckets << "strategy\tbucket\tcount\taccuracy\n";
    for (std::size_t r = 0; r < cmp.rows.size(); ++r) {
        const std::vector<BucketReport> reports =
            characteristic_breakdown(cmp.characteristics, cmp.predictions[r].labels, cmp.gold,
                                     config.complexity_threshold);
        for (const auto& b : reports) {
            buckets << to_string(cmp.rows[r].strategy) << '\t' << b.bucket << '\t' << b.count
                    << '\t' << format_double(b.accuracy) << '\n';
        }
    }
    detail::write_file(out_path / "buckets.tsv", buckets.str());
    output.files_written.push_back("buckets.tsv");
    return output;
}

// predict: one JSON record per input line with the fused distribution, the
// final label and each model's standardized distribution.
inline void cmd_predict(const ExperimentConfig& config, const TrainedArtifact& artifact,
                        std::istream& in, std::ostream& out, bool with_ids = false) {
    check_artifact_compatible(artifact, detail::registry_snapshot(config));
    const ModelRegistry registry = build_registry(config, artifact.tfidf_models);
    const Strategy strategy = config.predict_strategy;
    if (strategy == Strategy::decision_fusion && !artifact.weights)
        throw Error(ErrorCategory::state, "artifact holds no decision weights");
    if (strategy == Strategy::feature_fusion && !artifact.meta)
        throw Error(ErrorCategory::state, "artifact holds no meta-classifier");
    const std::vector<ModelKind> kinds = registry.kinds();
    const double delta = artifact.delta;

    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string id = std::to_string(index);
        std::string text = line;
        if (with_ids) {
            const std::size_t tab = line.find('\t');
            if (tab == std::string::npos)
                throw Error(ErrorCategory::data,
                            "input line " + std::to_string(index + 1) +
                                ": expected 'id<TAB>text' (running with ids)");
            id = line.substr(0, tab);
            text = line.substr(tab + 1);
        }
        const std::string normalized = normalize(text);
        const std::vector<ModelView> views = registry.run(id, normalized);
        std::vector<PolarityDistribution> dists;
        dists.reserve(views.size());
        for (const auto& v : views) dists.push_back(v.dist);

        nlohmann::json record;
        record["id"] = id;
        record["text"] = text;
        record["strategy"] = to_string(strategy);
        nlohmann::json models = nlohmann::json::object();
        for (std::size_t m = 0; m < views.size(); ++m) {
            models[registry[m].id] = {{"p_pos", views[m].dist.p_pos},
                                      {"p_neg", views[m].dist.p_neg},
                                      {"label", to_string(classify(views[m].dist, delta))}};
        }
        record["models"] = std::move(models);

        if (strategy == Strategy::feature_fusion) {
            const CategoryDistribution d =
                feature_fuse(*artifact.meta, registry.concat_features(views));
            record["fused"] = {{"negative", d.of(SentimentLabel::negative)},
                               {"neutral", d.of(SentimentLabel::neutral)},
                               {"positive", d.of(SentimentLabel::positive)}};
            record["label"] = to_string(classify_category(d, delta));
        } else {
            PolarityDistribution d;
            switch (strategy) {
                case Strategy::simple_average: d = simple_average(dists); break;
                case Strategy::confidence_weighted: d = confidence_weighted(dists); break;
                case Strategy::median_average: d = median_average(dists); break;
                case Strategy::max_confidence: d = max_confidence(dists); break;
                case Strategy::decision_fusion: d = decision_fuse(*artifact.weights, dists); break;
                case Strategy::adaptive_fusion: {
                    const TextCharacteristics c =
                        extract_text_characteristics(normalized, config.characteristics);
                    d = adaptive_fuse(artifact.rules, c, kinds, dists);
                    break;
                }
                default:
                    throw Error(ErrorCategory::config, "strategy not usable for predict");
            }
            record["fused"] = {{"p_pos", d.p_pos}, {"p_neg", d.p_neg}};
            record["label"] = to_string(classify(d, delta));
        }
        out << record.dump() << '\n';
        ++index;
    }
}

// characteristics: one JSON record per input line with every psi(x) field.
inline void cmd_characteristics(std::istream& in, std::ostream& out,
                                const CharacteristicsConfig& config = {}) {
    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string normalized = normalize(line);
        const TextCharacteristics c = extract_text_characteristics(normalized, config);
        nlohmann::json record;
        record["id"] = std::to_string(index);
        record["text"] = line;
        record["normalized"] = normalized;
        record["token_count"] = c.token_count;
        record["has_negation"] = c.has_negation;
        record["positive_cue_count"] = c.positive_cue_count;
        record["negative_cue_count"] = c.negative_cue_count;
        record["emotional_complexity"] = c.emotional_complexity;
        record["mixed_emotions"] = c.mixed_emotions;
        record["has_contrast_connective"] = c.has_contrast_connective;
        record["length_bucket"] = to_string(c.length_bucket);
        out << record.dump() << '\n';
        ++index;
    }
}

}  // namespace sentifuse
