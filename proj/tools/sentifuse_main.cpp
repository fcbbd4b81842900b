#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "sentifuse/sentifuse.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    std::int64_t seed = -1;
    bool has_seed = false;
};

sentifuse::ExperimentConfig load_with_overrides(const CommonOptions& opts) {
    sentifuse::ExperimentConfig config = sentifuse::load_config(opts.config_path);
    if (opts.has_seed) {
        config.seed = static_cast<std::uint64_t>(opts.seed);
        config.training.seed = config.seed;
    }
    if (!opts.out_dir.empty()) config.output_dir = opts.out_dir;
    return config;
}

std::string artifact_path_for(const sentifuse::ExperimentConfig& config,
                              const std::string& explicit_path) {
    if (!explicit_path.empty()) return explicit_path;
    return (std::filesystem::path(config.output_dir) / "artifact.txt").string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sentifuse: model-agnostic sentiment fusion engine"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string artifact_path;
    std::string input_path;
    bool with_ids = false;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* config_opt = cmd->add_option("--config", opts.config_path, "experiment config (JSON)");
        if (needs_config) config_opt->required()->check(CLI::ExistingFile);
        cmd->add_option("--out", opts.out_dir, "output directory (overrides config)");
        cmd->add_option("--seed", opts.seed, "random seed (overrides config)")
            ->each([&](const std::string&) { opts.has_seed = true; });
    };

    CLI::App* train = app.add_subcommand("train", "fit models, fusion weights and meta-classifier");
    add_common(train, true);

    CLI::App* evaluate = app.add_subcommand("evaluate", "compare strategies on the test split");
    add_common(evaluate, true);
    evaluate->add_option("--artifact", artifact_path, "trained artifact path (default: <out>/artifact.txt)");

    CLI::App* predict = app.add_subcommand("predict", "label texts with the configured strategy");
    add_common(predict, true);
    predict->add_option("--artifact", artifact_path, "trained artifact path (default: <out>/artifact.txt)");
    predict->add_option("--input", input_path, "input file, one text per line (default: stdin)");
    predict->add_flag("--with-ids", with_ids, "input lines are 'id<TAB>text'");

    CLI::App* characteristics =
        app.add_subcommand("characteristics", "report psi(x) per input line");
    add_common(characteristics, false);
    characteristics->add_option("--input", input_path, "input file (default: stdin)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (train->parsed()) {
            const sentifuse::ExperimentConfig config = load_with_overrides(opts);
            sentifuse::cmd_train(config, config.output_dir, std::cout);
            return 0;
        }
        if (evaluate->parsed()) {
            const sentifuse::ExperimentConfig config = load_with_overrides(opts);
            const sentifuse::TrainedArtifact artifact =
                sentifuse::load_artifact(artifact_path_for(config, artifact_path));
            sentifuse::cmd_evaluate(config, artifact, config.output_dir, std::cout);
            return 0;
        }

        std::ifstream file_input;
        std::istream* input = &std::cin;
        if (!input_path.empty()) {
            file_input.open(input_path);
            if (!file_input) {
                std::cerr << "error [config]: cannot open input '" << input_path << "'\n";
                return 1;
            }
            input = &file_input;
        }

        if (predict->parsed()) {
            const sentifuse::ExperimentConfig config = load_with_overrides(opts);
            const sentifuse::TrainedArtifact artifact =
                sentifuse::load_artifact(artifact_path_for(config, artifact_path));
            sentifuse::cmd_predict(config, artifact, *input, std::cout, with_ids);
            return 0;
        }
        if (characteristics->parsed()) {
            sentifuse::CharacteristicsConfig char_config;
            if (!opts.config_path.empty())
                char_config = sentifuse::load_config(opts.config_path).characteristics;
            sentifuse::cmd_characteristics(*input, std::cout, char_config);
            return 0;
        }
    } catch (const sentifuse::Error& e) {
        std::cerr << "error [" << sentifuse::to_string(e.category()) << "]: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
