#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sentifuse/training/training.hpp"

using namespace sentifuse;
using Catch::Matchers::WithinAbs;

namespace {

// Bundle where one model mirrors gold and the other confidently opposes
// it, including records the perfect model gets right only barely - any
// nonzero adversarial weight strictly loses those.
ValidationBundle adversarial_bundle(std::mt19937_64& rng, std::size_t n) {
    ValidationBundle bundle;
    for (std::size_t i = 0; i < n; ++i) {
        const SentimentLabel gold = kCanonicalLabels[rng() % 3];
        const double jitter = static_cast<double>(rng() % 100) / 10000.0;  // up to 0.01
        PolarityDistribution perfect{0.5, 0.5};
        const bool barely = (i % 4) == 0;
        if (gold == SentimentLabel::positive)
            perfect = barely ? PolarityDistribution{0.56 + jitter, 0.44 - jitter}
                             : PolarityDistribution{0.9 + jitter, 0.1 - jitter};
        else if (gold == SentimentLabel::negative)
            perfect = barely ? PolarityDistribution{0.44 - jitter, 0.56 + jitter}
                             : PolarityDistribution{0.1 - jitter, 0.9 + jitter};
        PolarityDistribution wrong{0.5, 0.5};
        if (gold == SentimentLabel::positive) wrong = {0.02, 0.98};
        else if (gold == SentimentLabel::negative) wrong = {0.98, 0.02};
        else wrong = (rng() % 2) ? PolarityDistribution{0.98, 0.02}
                                 : PolarityDistribution{0.02, 0.98};

        bundle.dists.push_back({perfect, wrong});
        FeatureVector fv;
        fv.values = {perfect.p_pos, wrong.p_pos};
        fv.schema = {"perfect.p_pos", "wrong.p_pos"};
        bundle.features.push_back(std::move(fv));
        bundle.gold.push_back(gold);
        bundle.characteristics.push_back({});
    }
    return bundle;
}

double bundle_f1(const ValidationBundle& bundle, const std::vector<double>& weights,
                 double delta) {
    ConfusionMatrix matrix;
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        matrix.add(bundle.gold[i], classify(detail::weighted_merge(weights, bundle.dists[i]), delta));
    }
    return compute_metrics(matrix).macro_f1;
}

}  // namespace

TEST_CASE("a single-model pool tunes to weight 1.0") {
    ValidationBundle bundle;
    bundle.dists = {{{0.9, 0.1}}, {{0.2, 0.8}}, {{0.5, 0.5}}};
    bundle.features = {FeatureVector{{0.9}, {"m.p"}}, FeatureVector{{0.2}, {"m.p"}},
                       FeatureVector{{0.5}, {"m.p"}}};
    bundle.gold = {SentimentLabel::positive, SentimentLabel::negative, SentimentLabel::neutral};
    bundle.characteristics.resize(3);
    const FusionWeights w = tune_decision_weights(bundle, 0.1);
    REQUIRE(w.values.size() == 1);
    CHECK(w.values[0] == 1.0);
}

TEST_CASE("the tuner zeroes an always-wrong model") {
    std::mt19937_64 rng(67);
    const ValidationBundle bundle = adversarial_bundle(rng, 60);
    const FusionWeights tuned = tune_decision_weights(bundle, 0.1);
    REQUIRE(tuned.values.size() == 2);
    CHECK(tuned.values[0] == 1.0);
    CHECK(tuned.values[1] == 0.0);
}

TEST_CASE("tuned weights never score below equal weights") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 8; ++trial) {
        ValidationBundle bundle;
        const std::size_t n_models = 2 + rng() % 2;
        for (int i = 0; i < 40; ++i) {
            const SentimentLabel gold = kCanonicalLabels[rng() % 3];
            std::vector<PolarityDistribution> dists;
            for (std::size_t m = 0; m < n_models; ++m) {
                const double p = static_cast<double>(rng() >> 11) * 0x1p-53;
                dists.push_back({p, 1.0 - p});
            }
            bundle.dists.push_back(std::move(dists));
            FeatureVector fv;
            fv.values = {0.0};
            fv.schema = {"x"};
            bundle.features.push_back(std::move(fv));
            bundle.gold.push_back(gold);
            bundle.characteristics.push_back({});
        }
        const double delta = 0.1;
        const FusionWeights tuned = tune_decision_weights(bundle, delta);
        const double tuned_f1 = bundle_f1(bundle, tuned.values, delta);
        const double equal_f1 = bundle_f1(bundle, std::vector<double>(n_models, 1.0), delta);
        CHECK(tuned_f1 >= equal_f1 - 1e-12);
    }
}

TEST_CASE("identical model outputs tie-break to equal weights") {
    ValidationBundle bundle;
    std::mt19937_64 rng(73);
    for (int i = 0; i < 30; ++i) {
        const double p = static_cast<double>(rng() >> 11) * 0x1p-53;
        const PolarityDistribution d{p, 1.0 - p};
        bundle.dists.push_back({d, d, d});
        FeatureVector fv;
        fv.values = {p};
        fv.schema = {"x"};
        bundle.features.push_back(std::move(fv));
        bundle.gold.push_back(classify(d, 0.1));
        bundle.characteristics.push_back({});
    }
    const FusionWeights tuned = tune_decision_weights(bundle, 0.1);
    REQUIRE(tuned.values.size() == 3);
    CHECK(tuned.values[0] == tuned.values[1]);
    CHECK(tuned.values[1] == tuned.values[2]);
    CHECK(tuned.values[0] == 1.0);
}

TEST_CASE("tuner validates its inputs") {
    ValidationBundle empty;
    CHECK_THROWS_AS(tune_decision_weights(empty, 0.1), Error);

    ValidationBundle bundle;
    bundle.dists = {{{0.9, 0.1}}};
    bundle.features = {FeatureVector{{0.9}, {"m.p"}}};
    bundle.gold = {SentimentLabel::positive};
    bundle.characteristics.resize(1);
    CHECK_THROWS_AS(tune_decision_weights(bundle, 0.1, 0.3), Error);  // 0.3 does not divide 1
    CHECK_THROWS_AS(tune_decision_weights(bundle, 1.5), Error);
}

TEST_CASE("coordinate ascent handles pools beyond the exhaustive grid") {
    std::mt19937_64 rng(79);
    ValidationBundle bundle;
    const std::size_t n_models = 5;  // beyond kExhaustiveGridMaxModels
    for (int i = 0; i < 30; ++i) {
        const SentimentLabel gold = kCanonicalLabels[rng() % 3];
        std::vector<PolarityDistribution> dists;
        for (std::size_t m = 0; m < n_models; ++m) {
            double p = static_cast<double>(rng() >> 11) * 0x1p-53;
            if (m == 0) {  // model 0 is informative
                p = gold == SentimentLabel::positive ? 0.9
                    : gold == SentimentLabel::negative ? 0.1 : 0.5;
            }
            dists.push_back({p, 1.0 - p});
        }
        bundle.dists.push_back(std::move(dists));
        FeatureVector fv;
        fv.values = {0.0};
        fv.schema = {"x"};
        bundle.features.push_back(std::move(fv));
        bundle.gold.push_back(gold);
        bundle.characteristics.push_back({});
    }
    const double delta = 0.1;
    const FusionWeights tuned = tune_decision_weights(bundle, delta);
    REQUIRE(tuned.values.size() == n_models);
    const double tuned_f1 = bundle_f1(bundle, tuned.values, delta);
    const double equal_f1 = bundle_f1(bundle, std::vector<double>(n_models, 1.0), delta);
    CHECK(tuned_f1 >= equal_f1 - 1e-12);
}

TEST_CASE("meta-classifier training: separable features, determinism, regularization limit") {
    std::mt19937_64 rng(83);
    ValidationBundle bundle;
    for (int i = 0; i < 120; ++i) {
        const SentimentLabel gold = kCanonicalLabels[rng() % 3];
        FeatureVector fv;
        fv.values = {gold == SentimentLabel::negative ? 1.0 : 0.0,
                     gold == SentimentLabel::neutral ? 1.0 : 0.0,
                     gold == SentimentLabel::positive ? 1.0 : 0.0};
        fv.schema = {"m.one_hot_neg", "m.one_hot_neu", "m.one_hot_pos"};
        bundle.features.push_back(std::move(fv));
        bundle.dists.push_back({{0.5, 0.5}});
        bundle.gold.push_back(gold);
        bundle.characteristics.push_back({});
    }

    LogisticTrainConfig config;
    config.lambda = 0.01;
    const MetaClassifier meta = train_meta_classifier(bundle, config);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        const CategoryDistribution d = feature_fuse(meta, bundle.features[i]);
        if (classify_category(d, 0.0) == bundle.gold[i]) ++correct;
    }
    CHECK(static_cast<double>(correct) / static_cast<double>(bundle.size()) >= 0.99);

    const MetaClassifier again = train_meta_classifier(bundle, config);
    CHECK(again.model.weights == meta.model.weights);
    CHECK(again.model.bias == meta.model.bias);

    LogisticTrainConfig crushed;
    crushed.lambda = 1e6;
    const MetaClassifier flat = train_meta_classifier(bundle, crushed);
    for (double w : flat.model.weights) CHECK(std::abs(w) < 1e-3);
}

TEST_CASE("meta-classifier rejects degenerate gold labels") {
    ValidationBundle bundle;
    for (int i = 0; i < 4; ++i) {
        FeatureVector fv;
        fv.values = {1.0};
        fv.schema = {"m.x"};
        bundle.features.push_back(std::move(fv));
        bundle.dists.push_back({{0.5, 0.5}});
        bundle.gold.push_back(SentimentLabel::positive);
        bundle.characteristics.push_back({});
    }
    CHECK_THROWS_AS(train_meta_classifier(bundle, {}), Error);
}

TEST_CASE("default adaptive rules are the documented four") {
    const std::vector<AdaptiveRule> rules = default_adaptive_rules();
    REQUIRE(rules.size() == 4);
    for (const auto& rule : rules) CHECK(rule.multiplier > 0.0);
    CHECK(rules[0].condition == RuleCondition::has_negation);
    CHECK(rules[0].target_kind == ModelKind::encoding);
    CHECK(rules[0].multiplier == 1.5);
    CHECK(rules[1].condition == RuleCondition::mixed_emotions);
    CHECK(rules[1].target_kind == ModelKind::encoding);
    CHECK(rules[2].condition == RuleCondition::short_text);
    CHECK(rules[2].target_kind == ModelKind::lexicon);
    CHECK(rules[3].condition == RuleCondition::has_negation);
    CHECK(rules[3].target_kind == ModelKind::lexicon);
    CHECK(rules[3].multiplier == 0.75);
}
