#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <cmath>

#include "sentifuse/core/text_characteristics.hpp"
#include "sentifuse/data/dataset.hpp"
#include "sentifuse/error.hpp"
#include "sentifuse/eval/pipeline.hpp"
#include "sentifuse/fusion/fusion.hpp"
#include "sentifuse/models/logistic_regression.hpp"
#include "sentifuse/training/training.hpp"

namespace sentifuse {

struct ModelConfig {
    std::string id;
    ModelKind kind = ModelKind::lexicon;
    std::string lexicon_file;      // lexicon kind; empty -> builtin lexicon
    int negation_window = 3;
    std::map<std::string, double> intensifiers;  // empty -> builtin set
    std::string pattern_file;      // pattern kind; empty -> builtin patterns
    std::string predictions_file;  // non-empty -> external-prediction adapter
    int min_df = 2;                // machine_learning hyperparameters
    LogisticTrainConfig train;

    bool is_external() const { return !predictions_file.empty(); }
};

struct DatasetConfig {
    std::string path;
    DatasetFormat format;
    LabelMapping labels;
};

struct ExperimentConfig {
    DatasetConfig dataset;
    std::uint64_t seed = 42;
    std::array<double, 3> ratios = {0.8, 0.1, 0.1};
    std::vector<ModelConfig> models;
    double delta = 0.1;
    std::vector<Strategy> strategies;  // evaluation rows, in order
    Strategy predict_strategy = Strategy::feature_fusion;
    std::vector<AdaptiveRule> adaptive_rules;
    std::string curves = "auto";  // auto | always | never
    LogisticTrainConfig training;  // meta-classifier + default for ml models
    double grid_step = 0.1;
    CharacteristicsConfig characteristics;
    std::size_t complexity_threshold = 4;
    std::string output_dir = "out";
    std::string digest;  // of the training-relevant sections
};

namespace detail {

using json = nlohmann::json;

inline Error config_error(const std::string& path, const std::string& what) {
    return Error(ErrorCategory::config, "config " + path + ": " + what);
}

inline const json& require(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw config_error(path + "." + key, "missing required field");
    return *it;
}

template <typename T>
T get_or(const json& obj, const std::string& key, T fallback, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const json::exception& e) {
        throw config_error(path + "." + key, e.what());
    }
}

inline std::string resolve_path(const std::string& value, const std::filesystem::path& base) {
    std::filesystem::path p(value);
    if (p.is_absolute()) return p.string();
    return (base / p).string();
}

inline void require_exists(const std::string& path, const std::string& field) {
    if (!std::filesystem::exists(path))
        throw config_error(field, "referenced file does not exist: " + path);
}

inline void validate_model_id(const std::string& id) {
    if (id.empty()) throw config_error("models[].id", "model id must not be empty");
    for (char c : id) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
            throw config_error("models[].id",
                               "model id '" + id + "' may only use [A-Za-z0-9_.-]");
    }
}

inline char parse_single_char(const std::string& value, const std::string& field) {
    if (value == "\\t" || value == "tab") return '\t';
    if (value.size() != 1)
        throw config_error(field, "expected a single character (or 'tab'), got '" + value + "'");
    return value[0];
}

// FNV-1a 64 over the canonical dump of the training-relevant sections.
inline std::string digest_sections(const json& root) {
    json relevant = json::object();
    for (const char* key : {"dataset", "seed", "split", "models", "fusion", "training",
                            "characteristics"}) {
        if (root.contains(key)) relevant[key] = root.at(key);
    }
    const std::string dump = relevant.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

}  // namespace detail

// Parses and validates the declarative experiment file. Relative paths are
// resolved against the config file's directory and existence-checked now,
// so a broken reference fails before any compute starts.
inline ExperimentConfig load_config(const std::string& config_path) {
    namespace fs = std::filesystem;
    std::ifstream in(config_path);
    if (!in) throw Error(ErrorCategory::config, "cannot open config '" + config_path + "'");
    detail::json root;
    try {
        root = detail::json::parse(in);
    } catch (const detail::json::exception& e) {
        throw Error(ErrorCategory::config, "config " + config_path + ": " + e.what());
    }
    const fs::path base = fs::path(config_path).parent_path();

    ExperimentConfig config;
    config.digest = detail::digest_sections(root);

    // dataset
    const auto& ds = detail::require(root, "dataset", "");
    config.dataset.path =
        detail::resolve_path(detail::require(ds, "path", "dataset").get<std::string>(), base);
    detail::require_exists(config.dataset.path, "dataset.path");
    config.dataset.format.delimiter = detail::parse_single_char(
        detail::get_or<std::string>(ds, "delimiter", ",", "dataset"), "dataset.delimiter");
    config.dataset.format.quote = detail::parse_single_char(
        detail::get_or<std::string>(ds, "quote", "\"", "dataset"), "dataset.quote");
    config.dataset.format.has_header = detail::get_or<bool>(ds, "has_header", true, "dataset");
    config.dataset.format.text_column =
        detail::get_or<std::string>(ds, "text_column", "text", "dataset");
    config.dataset.format.label_column =
        detail::get_or<std::string>(ds, "label_column", "label", "dataset");
    config.dataset.format.id_column = detail::get_or<std::string>(ds, "id_column", "", "dataset");
    if (ds.contains("label_mapping_file")) {
        const std::string mapping_path =
            detail::resolve_path(ds.at("label_mapping_file").get<std::string>(), base);
        detail::require_exists(mapping_path, "dataset.label_mapping_file");
        config.dataset.labels = load_label_mapping(mapping_path);
    } else if (ds.contains("label_mapping")) {
        for (const auto& [token, label] : ds.at("label_mapping").items())
            config.dataset.labels.mapping[token] = label_from_string(label.get<std::string>());
    } else {
        for (SentimentLabel l : kCanonicalLabels)
            config.dataset.labels.mapping[to_string(l)] = l;  // identity mapping
    }

    config.seed = detail::get_or<std::uint64_t>(root, "seed", 42, "");
    if (root.contains("split")) {
        const auto& split = root.at("split");
        const auto ratios = detail::get_or<std::vector<double>>(
            split, "ratios", {0.8, 0.1, 0.1}, "split");
        if (ratios.size() != 3)
            throw detail::config_error("split.ratios", "expected exactly three ratios");
        config.ratios = {ratios[0], ratios[1], ratios[2]};
        double sum = ratios[0] + ratios[1] + ratios[2];
        if (std::abs(sum - 1.0) > 1e-9)
            throw detail::config_error("split.ratios", "ratios must sum to 1");
    }

    // models
    const auto& models = detail::require(root, "models", "");
    if (!models.is_array() || models.empty())
        throw detail::config_error("models", "expected a non-empty array");
    for (std::size_t i = 0; i < models.size(); ++i) {
        const std::string where = "models[" + std::to_string(i) + "]";
        const auto& m = models.at(i);
        ModelConfig mc;
        mc.id = detail::require(m, "id", where).get<std::string>();
        detail::validate_model_id(mc.id);
        mc.kind = model_kind_from_string(detail::require(m, "kind", where).get<std::string>());
        if (m.contains("predictions_file")) {
            mc.predictions_file =
                detail::resolve_path(m.at("predictions_file").get<std::string>(), base);
            detail::require_exists(mc.predictions_file, where + ".predictions_file");
        }
        if (mc.kind == ModelKind::encoding && !mc.is_external())
            throw detail::config_error(where,
                                       "encoding models run offline; predictions_file is required");
        if (m.contains("lexicon_file")) {
            mc.lexicon_file = detail::resolve_path(m.at("lexicon_file").get<std::string>(), base);
            detail::require_exists(mc.lexicon_file, where + ".lexicon_file");
        }
        if (m.contains("pattern_file")) {
            mc.pattern_file = detail::resolve_path(m.at("pattern_file").get<std::string>(), base);
            detail::require_exists(mc.pattern_file, where + ".pattern_file");
        }
        mc.negation_window = detail::get_or<int>(m, "negation_window", 3, where);
        if (mc.negation_window < 1)
            throw detail::config_error(where + ".negation_window", "must be >= 1");
        if (m.contains("intensifiers")) {
            for (const auto& [term, mult] : m.at("intensifiers").items()) {
                const double v = mult.get<double>();
                if (!(v > 0.0))
                    throw detail::config_error(where + ".intensifiers", "multipliers must be positive");
                mc.intensifiers[term] = v;
            }
        }
        mc.min_df = detail::get_or<int>(m, "min_df", 2, where);
        mc.train.lambda = detail::get_or<double>(m, "lambda", 1.0, where);
        mc.train.lr = detail::get_or<double>(m, "lr", 0.1, where);
        mc.train.tol = detail::get_or<double>(m, "tol", 1e-6, where);
        mc.train.max_iters = detail::get_or<int>(m, "max_iters", 500, where);
        for (const auto& other : config.models) {
            if (other.id == mc.id)
                throw detail::config_error(where + ".id", "duplicate model id '" + mc.id + "'");
        }
        config.models.push_back(std::move(mc));
    }

    // fusion
    config.adaptive_rules = default_adaptive_rules();
    if (root.contains("fusion")) {
        const auto& fusion = root.at("fusion");
        config.delta = detail::get_or<double>(fusion, "delta", 0.1, "fusion");
        validate_delta(config.delta);
        if (fusion.contains("strategies")) {
            for (const auto& s : fusion.at("strategies"))
                config.strategies.push_back(strategy_from_string(s.get<std::string>()));
            if (config.strategies.empty())
                throw detail::config_error("fusion.strategies", "must not be empty");
        }
        if (fusion.contains("predict_strategy"))
            config.predict_strategy =
                strategy_from_string(fusion.at("predict_strategy").get<std::string>());
        if (fusion.contains("adaptive_rules")) {
            config.adaptive_rules.clear();
            const auto& rules = fusion.at("adaptive_rules");
            for (std::size_t i = 0; i < rules.size(); ++i) {
                const std::string where = "fusion.adaptive_rules[" + std::to_string(i) + "]";
                const auto& r = rules.at(i);
                AdaptiveRule rule;
                rule.condition = rule_condition_from_string(
                    detail::require(r, "condition", where).get<std::string>());
                rule.threshold = detail::get_or<std::size_t>(r, "threshold", 0, where);
                rule.target_kind = model_kind_from_string(
                    detail::require(r, "target_kind", where).get<std::string>());
                rule.multiplier = detail::require(r, "multiplier", where).get<double>();
                rule.validate();
                config.adaptive_rules.push_back(rule);
            }
        }
        config.curves = detail::get_or<std::string>(fusion, "curves", "auto", "fusion");
        if (config.curves != "auto" && config.curves != "always" && config.curves != "never")
            throw detail::config_error("fusion.curves", "expected auto|always|never");
    }
    if (config.strategies.empty())
        config.strategies.assign(kAllStrategies.begin(), kAllStrategies.end());
    if (config.predict_strategy == Strategy::majority_vote)
        throw detail::config_error("fusion.predict_strategy",
                                   "majority_vote yields labels only; it cannot produce the fused "
                                   "distribution predict reports");
    if (config.predict_strategy == Strategy::best_individual)
        throw detail::config_error("fusion.predict_strategy",
                                   "best_individual is an evaluation row, not a fusion strategy");

    // training
    if (root.contains("training")) {
        const auto& tr = root.at("training");
        config.training.lambda = detail::get_or<double>(tr, "lambda", 1.0, "training");
        config.training.lr = detail::get_or<double>(tr, "lr", 0.1, "training");
        config.training.tol = detail::get_or<double>(tr, "tol", 1e-6, "training");
        config.training.max_iters = detail::get_or<int>(tr, "max_iters", 500, "training");
        config.grid_step = detail::get_or<double>(tr, "grid_step", 0.1, "training");
    }
    config.training.seed = config.seed;

    // characteristics
    if (root.contains("characteristics")) {
        const auto& ch = root.at("characteristics");
        config.characteristics.short_below =
            detail::get_or<std::size_t>(ch, "short_below", 8, "characteristics");
        config.characteristics.long_above =
            detail::get_or<std::size_t>(ch, "long_above", 40, "characteristics");
        config.complexity_threshold =
            detail::get_or<std::size_t>(ch, "complexity_threshold", 4, "characteristics");
    }

    config.output_dir = detail::get_or<std::string>(root, "output_dir", "out", "");
    return config;
}

}  // namespace sentifuse
