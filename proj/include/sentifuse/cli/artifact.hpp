#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sentifuse/error.hpp"
#include "sentifuse/fusion/fusion.hpp"
#include "sentifuse/models/linear_model.hpp"
#include "sentifuse/models/registry.hpp"
#include "sentifuse/numeric_io.hpp"

namespace sentifuse {

inline constexpr int kArtifactVersion = 1;

// Everything `train` produces, in one versioned text file: the registry
// snapshot it was trained against, the classification threshold, tuned
// decision weights, the meta-classifier, the adaptive rule set and the
// fitted TF-IDF linear models. Doubles are written in shortest round-trip
// form, so save/load reproduces predictions bit-exactly.
struct TrainedArtifact {
    int version = kArtifactVersion;
    std::string config_digest;
    std::vector<std::pair<std::string, ModelKind>> registry;
    double delta = 0.1;
    std::optional<FusionWeights> weights;
    std::optional<MetaClassifier> meta;
    std::vector<AdaptiveRule> rules;
    std::map<std::string, TfidfLinearModel> tfidf_models;
};

namespace detail {

inline void write_doubles(std::ostream& out, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ' ';
        out << format_double(values[i]);
    }
    out << '\n';
}

class ArtifactReader {
public:
    explicit ArtifactReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw Error(ErrorCategory::config, "cannot open artifact '" + path + "'");
    }

    std::vector<std::string> next(const std::string& expected_head) {
        std::vector<std::string> fields = next_any();
        if (fields.empty() || fields[0] != expected_head)
            throw fail("expected '" + expected_head + "' line");
        return fields;
    }

    std::vector<std::string> next_any() {
        std::string line;
        if (!std::getline(in_, line)) throw fail("unexpected end of file");
        ++line_no_;
        std::vector<std::string> fields;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) fields.push_back(tok);
        return fields;
    }

    std::vector<double> next_doubles(std::size_t count, const std::string& what) {
        const std::vector<std::string> fields = next_any();
        if (fields.size() != count) throw fail(what + ": expected " + std::to_string(count) + " values");
        std::vector<double> out;
        out.reserve(count);
        for (const auto& f : fields) out.push_back(parse_double(f, context()));
        return out;
    }

    Error fail(const std::string& what) {
        return Error(ErrorCategory::data, context() + ": " + what);
    }

    std::string context() const { return path_ + ":" + std::to_string(line_no_); }

private:
    std::string path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
};

}  // namespace detail

inline void save_artifact(const TrainedArtifact& artifact, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCategory::config, "cannot write artifact '" + path + "'");
    out << "sentifuse_artifact " << artifact.version << '\n';
    out << "digest " << artifact.config_digest << '\n';
    out << "delta " << format_double(artifact.delta) << '\n';
    out << "registry " << artifact.registry.size() << '\n';
    for (const auto& [id, kind] : artifact.registry)
        out << "entry " << id << ' ' << to_string(kind) << '\n';

    if (artifact.weights) {
        out << "weights " << artifact.weights->values.size() << '\n';
        detail::write_doubles(out, artifact.weights->values);
    } else {
        out << "weights none\n";
    }

    out << "rules " << artifact.rules.size() << '\n';
    for (const auto& rule : artifact.rules) {
        out << "rule " << to_string(rule.condition) << ' ' << rule.threshold << ' '
            << to_string(rule.target_kind) << ' ' << format_double(rule.multiplier) << '\n';
    }

    if (artifact.meta) {
        const MetaClassifier& meta = *artifact.meta;
        out << "meta " << meta.schema.size() << '\n';
        out << "meta_lambda " << format_double(meta.lambda) << '\n';
        out << "meta_schema";
        for (const auto& name : meta.schema) out << ' ' << name;
        out << '\n';
        for (int c = 0; c < meta.model.num_classes; ++c) {
            out << "meta_coef ";
            std::vector<double> row(meta.model.weights.begin() + c * meta.model.dim,
                                    meta.model.weights.begin() + (c + 1) * meta.model.dim);
            detail::write_doubles(out, row);
        }
        out << "meta_bias ";
        detail::write_doubles(out, meta.model.bias);
    } else {
        out << "meta none\n";
    }

    out << "tfidf_models " << artifact.tfidf_models.size() << '\n';
    for (const auto& [id, model] : artifact.tfidf_models) {
        const TfidfVocabulary& vocab = model.vocabulary();
        const LogisticModel& clf = model.classifier();
        out << "tfidf " << id << ' ' << vocab.size() << '\n';
        for (std::size_t i = 0; i < vocab.size(); ++i)
            out << "term " << vocab.terms[i] << ' ' << format_double(vocab.idf[i]) << '\n';
        for (int c = 0; c < clf.num_classes; ++c) {
            out << "coef ";
            std::vector<double> row(clf.weights.begin() + c * clf.dim,
                                    clf.weights.begin() + (c + 1) * clf.dim);
            detail::write_doubles(out, row);
        }
        out << "bias ";
        detail::write_doubles(out, clf.bias);
    }
    out << "end\n";
    if (!out) throw Error(ErrorCategory::config, "failed writing artifact '" + path + "'");
}

inline TrainedArtifact load_artifact(const std::string& path) {
    detail::ArtifactReader reader(path);
    TrainedArtifact artifact;

    auto head = reader.next("sentifuse_artifact");
    if (head.size() != 2) throw reader.fail("bad artifact header");
    artifact.version = static_cast<int>(parse_int(head[1], reader.context()));
    if (artifact.version != kArtifactVersion)
        throw Error(ErrorCategory::config,
                    "unsupported artifact version " + head[1] + " (supported: " +
                        std::to_string(kArtifactVersion) + ")");

    auto digest = reader.next("digest");
    if (digest.size() != 2) throw reader.fail("bad digest line");
    artifact.config_digest = digest[1];

    auto delta = reader.next("delta");
    if (delta.size() != 2) throw reader.fail("bad delta line");
    artifact.delta = parse_double(delta[1], reader.context());

    auto registry = reader.next("registry");
    if (registry.size() != 2) throw reader.fail("bad registry line");
    const auto entry_count = static_cast<std::size_t>(parse_int(registry[1], reader.context()));
    for (std::size_t i = 0; i < entry_count; ++i) {
        auto entry = reader.next("entry");
        if (entry.size() != 3) throw reader.fail("bad entry line");
        artifact.registry.emplace_back(entry[1], model_kind_from_string(entry[2]));
    }

    auto weights = reader.next("weights");
    if (weights.size() != 2) throw reader.fail("bad weights line");
    if (weights[1] != "none") {
        const auto n = static_cast<std::size_t>(parse_int(weights[1], reader.context()));
        artifact.weights = FusionWeights::create(reader.next_doubles(n, "weights"));
    }

    auto rules = reader.next("rules");
    if (rules.size() != 2) throw reader.fail("bad rules line");
    const auto rule_count = static_cast<std::size_t>(parse_int(rules[1], reader.context()));
    for (std::size_t i = 0; i < rule_count; ++i) {
        auto fields = reader.next("rule");
        if (fields.size() != 5) throw reader.fail("bad rule line");
        AdaptiveRule rule;
        rule.condition = rule_condition_from_string(fields[1]);
        rule.threshold = static_cast<std::size_t>(parse_int(fields[2], reader.context()));
        rule.target_kind = model_kind_from_string(fields[3]);
        rule.multiplier = parse_double(fields[4], reader.context());
        rule.validate();
        artifact.rules.push_back(rule);
    }

    auto meta = reader.next("meta");
    if (meta.size() != 2) throw reader.fail("bad meta line");
    if (meta[1] != "none") {
        const auto dim = static_cast<std::size_t>(parse_int(meta[1], reader.context()));
        MetaClassifier mc;
        auto lambda = reader.next("meta_lambda");
        if (lambda.size() != 2) throw reader.fail("bad meta_lambda line");
        mc.lambda = parse_double(lambda[1], reader.context());
        auto schema = reader.next("meta_schema");
        if (schema.size() != dim + 1) throw reader.fail("meta_schema length mismatch");
        mc.schema.assign(schema.begin() + 1, schema.end());
        mc.model.num_classes = static_cast<int>(kLabelCount);
        mc.model.dim = static_cast<int>(dim);
        for (std::size_t c = 0; c < kLabelCount; ++c) {
            auto row = reader.next("meta_coef");
            if (row.size() != dim + 1) throw reader.fail("meta_coef length mismatch");
            for (std::size_t j = 1; j < row.size(); ++j)
                mc.model.weights.push_back(parse_double(row[j], reader.context()));
        }
        auto bias = reader.next("meta_bias");
        if (bias.size() != kLabelCount + 1) throw reader.fail("meta_bias length mismatch");
        for (std::size_t j = 1; j < bias.size(); ++j)
            mc.model.bias.push_back(parse_double(bias[j], reader.context()));
        artifact.meta = std::move(mc);
    }

    auto tfidf_models = reader.next("tfidf_models");
    if (tfidf_models.size() != 2) throw reader.fail("bad tfidf_models line");
    const auto model_count = static_cast<std::size_t>(parse_int(tfidf_models[1], reader.context()));
    for (std::size_t i = 0; i < model_count; ++i) {
        auto head_line = reader.next("tfidf");
        if (head_line.size() != 3) throw reader.fail("bad tfidf line");
        const std::string id = head_line[1];
        const auto vocab_size = static_cast<std::size_t>(parse_int(head_line[2], reader.context()));
        TfidfVocabulary vocab;
        for (std::size_t t = 0; t < vocab_size; ++t) {
            auto term = reader.next("term");
            if (term.size() != 3) throw reader.fail("bad term line");
            vocab.index.emplace(term[1], static_cast<int>(vocab.terms.size()));
            vocab.terms.push_back(term[1]);
            vocab.idf.push_back(parse_double(term[2], reader.context()));
        }
        LogisticModel clf;
        clf.num_classes = static_cast<int>(kLabelCount);
        clf.dim = static_cast<int>(vocab_size);
        for (std::size_t c = 0; c < kLabelCount; ++c) {
            auto row = reader.next("coef");
            if (row.size() != vocab_size + 1) throw reader.fail("coef length mismatch");
            for (std::size_t j = 1; j < row.size(); ++j)
                clf.weights.push_back(parse_double(row[j], reader.context()));
        }
        auto bias = reader.next("bias");
        if (bias.size() != kLabelCount + 1) throw reader.fail("bias length mismatch");
        std::vector<double> b;
        for (std::size_t j = 1; j < bias.size(); ++j)
            b.push_back(parse_double(bias[j], reader.context()));
        clf.bias = std::move(b);
        artifact.tfidf_models.emplace(id, TfidfLinearModel(std::move(vocab), std::move(clf)));
    }
    reader.next("end");
    return artifact;
}

// The artifact only applies to the exact registry it was trained against:
// same ids, same kinds, same order.
inline void check_artifact_compatible(const TrainedArtifact& artifact,
                                      const std::vector<std::pair<std::string, ModelKind>>& runtime) {
    if (artifact.registry.size() != runtime.size())
        throw Error(ErrorCategory::state,
                    "artifact was trained with " + std::to_string(artifact.registry.size()) +
                        " models, config declares " + std::to_string(runtime.size()));
    for (std::size_t i = 0; i < runtime.size(); ++i) {
        if (artifact.registry[i].first != runtime[i].first ||
            artifact.registry[i].second != runtime[i].second)
            throw Error(ErrorCategory::state,
                        "artifact registry mismatch at position " + std::to_string(i) +
                            ": artifact has '" + artifact.registry[i].first + "' (" +
                            to_string(artifact.registry[i].second) + "), config has '" +
                            runtime[i].first + "' (" + to_string(runtime[i].second) + ")");
    }
}

}  // namespace sentifuse
