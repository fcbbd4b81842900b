#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "sentifuse/eval/curves.hpp"
#include "sentifuse/eval/metrics.hpp"
#include "sentifuse/eval/pipeline.hpp"
#include "sentifuse/eval/split.hpp"

using namespace sentifuse;
using Catch::Matchers::WithinAbs;

namespace {

// From-definitions re-computation, independent of compute_metrics.
MetricsReport brute_force_metrics(const ConfusionMatrix& m) {
    MetricsReport r;
    double diag = 0.0, total = 0.0;
    for (SentimentLabel g : kCanonicalLabels)
        for (SentimentLabel p : kCanonicalLabels) total += static_cast<double>(m.at(g, p));
    for (SentimentLabel l : kCanonicalLabels) {
        const auto i = static_cast<std::size_t>(label_index(l));
        double tp = static_cast<double>(m.at(l, l));
        diag += tp;
        double fp = 0.0, fn = 0.0;
        for (SentimentLabel other : kCanonicalLabels) {
            if (other != l) {
                fp += static_cast<double>(m.at(other, l));
                fn += static_cast<double>(m.at(l, other));
            }
        }
        r.per_label[i].precision = (tp + fp) > 0.0 ? tp / (tp + fp) : 0.0;
        r.per_label[i].recall = (tp + fn) > 0.0 ? tp / (tp + fn) : 0.0;
        const double pr = r.per_label[i].precision + r.per_label[i].recall;
        r.per_label[i].f1 = pr > 0.0 ? 2.0 * r.per_label[i].precision * r.per_label[i].recall / pr : 0.0;
        r.macro_precision += r.per_label[i].precision / 3.0;
        r.macro_recall += r.per_label[i].recall / 3.0;
        r.macro_f1 += r.per_label[i].f1 / 3.0;
    }
    r.accuracy = diag / total;
    return r;
}

std::vector<TextRecord> make_records(const std::vector<std::pair<SentimentLabel, int>>& mix) {
    std::vector<TextRecord> records;
    int id = 0;
    for (const auto& [label, count] : mix) {
        for (int i = 0; i < count; ++i) {
            TextRecord r;
            r.id = std::to_string(id++);
            r.text = r.normalized = "text " + r.id;
            r.label = label;
            records.push_back(std::move(r));
        }
    }
    return records;
}

}  // namespace

TEST_CASE("metrics: perfect diagonal matrix scores 1 everywhere") {
    ConfusionMatrix m;
    m.add(SentimentLabel::negative, SentimentLabel::negative, 10);
    m.add(SentimentLabel::neutral, SentimentLabel::neutral, 5);
    m.add(SentimentLabel::positive, SentimentLabel::positive, 7);
    const MetricsReport r = compute_metrics(m);
    CHECK(r.accuracy == 1.0);
    CHECK(r.macro_precision == 1.0);
    CHECK(r.macro_recall == 1.0);
    CHECK(r.macro_f1 == 1.0);
}

TEST_CASE("metrics: hand-computed binary matrix with empty neutral") {
    // gold neg: 40 -> neg, 10 -> pos; gold pos: 20 -> neg, 30 -> pos
    ConfusionMatrix m;
    m.add(SentimentLabel::negative, SentimentLabel::negative, 40);
    m.add(SentimentLabel::negative, SentimentLabel::positive, 10);
    m.add(SentimentLabel::positive, SentimentLabel::negative, 20);
    m.add(SentimentLabel::positive, SentimentLabel::positive, 30);
    const MetricsReport r = compute_metrics(m);
    CHECK_THAT(r.accuracy, WithinAbs(0.70, 1e-12));
    const auto neg = static_cast<std::size_t>(label_index(SentimentLabel::negative));
    const auto neu = static_cast<std::size_t>(label_index(SentimentLabel::neutral));
    const auto pos = static_cast<std::size_t>(label_index(SentimentLabel::positive));
    CHECK_THAT(r.per_label[neg].precision, WithinAbs(0.6666666666666666, 1e-12));
    CHECK_THAT(r.per_label[neg].recall, WithinAbs(0.8, 1e-12));
    CHECK_THAT(r.per_label[neg].f1, WithinAbs(0.7272727272727272, 1e-12));
    CHECK_THAT(r.per_label[pos].precision, WithinAbs(0.75, 1e-12));
    CHECK_THAT(r.per_label[pos].recall, WithinAbs(0.6, 1e-12));
    CHECK_THAT(r.per_label[pos].f1, WithinAbs(0.6666666666666665, 1e-12));
    // empty neutral contributes zeros to the macro means
    CHECK(r.per_label[neu].precision == 0.0);
    CHECK(r.per_label[neu].recall == 0.0);
    CHECK_THAT(r.macro_precision, WithinAbs(0.47222222222222215, 1e-12));
    CHECK_THAT(r.macro_recall, WithinAbs(0.4666666666666666, 1e-12));
    CHECK_THAT(r.macro_f1, WithinAbs(0.46464646464646453, 1e-12));
}

TEST_CASE("metrics agree with the from-definitions oracle on random matrices") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 400; ++trial) {
        ConfusionMatrix m;
        std::uint64_t total = 0;
        for (SentimentLabel g : kCanonicalLabels) {
            for (SentimentLabel p : kCanonicalLabels) {
                const std::uint64_t c = rng() % 40;
                m.add(g, p, c);
                total += c;
            }
        }
        if (total == 0) m.add(SentimentLabel::neutral, SentimentLabel::neutral, 1);
        const MetricsReport fast = compute_metrics(m);
        const MetricsReport slow = brute_force_metrics(m);
        CHECK_THAT(fast.accuracy, WithinAbs(slow.accuracy, 1e-12));
        CHECK_THAT(fast.macro_precision, WithinAbs(slow.macro_precision, 1e-12));
        CHECK_THAT(fast.macro_recall, WithinAbs(slow.macro_recall, 1e-12));
        CHECK_THAT(fast.macro_f1, WithinAbs(slow.macro_f1, 1e-12));
        for (std::size_t i = 0; i < kLabelCount; ++i) {
            CHECK_THAT(fast.per_label[i].precision, WithinAbs(slow.per_label[i].precision, 1e-12));
            CHECK_THAT(fast.per_label[i].recall, WithinAbs(slow.per_label[i].recall, 1e-12));
            CHECK_THAT(fast.per_label[i].f1, WithinAbs(slow.per_label[i].f1, 1e-12));
        }
    }
    CHECK_THROWS_AS(compute_metrics(ConfusionMatrix{}), Error);
}

TEST_CASE("roc: separable scores, the 4-point hand case and error paths") {
    const std::vector<ScoredLabel> separable = {
        {0.9, true}, {0.8, true}, {0.3, false}, {0.1, false}};
    CHECK(roc_auc(roc_points(separable)) == 1.0);
    CHECK_THAT(pr_auc(pr_points(separable)), WithinAbs(1.0, 1e-12));

    // thresholds enumerated by hand: (0,0) (0,.5) (.5,.5) (.5,1) (1,1)
    const std::vector<ScoredLabel> hand = {
        {0.9, true}, {0.8, false}, {0.7, true}, {0.1, false}};
    const std::vector<RocPoint> curve = roc_points(hand);
    REQUIRE(curve.size() == 5);
    CHECK_THAT(roc_auc(curve), WithinAbs(0.75, 1e-15));

    const std::vector<ScoredLabel> one_class = {{0.9, true}, {0.8, true}};
    CHECK_THROWS_AS(roc_points(one_class), Error);
    try {
        roc_points(one_class);
    } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::undefined_curve);
    }
}

TEST_CASE("tied scores collapse into a single threshold point") {
    // two positives and one negative share score 0.5
    const std::vector<ScoredLabel> tied = {
        {0.9, true}, {0.5, true}, {0.5, true}, {0.5, false}, {0.1, false}};
    const std::vector<RocPoint> curve = roc_points(tied);
    // thresholds: 0.9, 0.5 (grouped), 0.1 -> 4 points with the origin
    REQUIRE(curve.size() == 4);
    CHECK(curve[1].fpr == 0.0);
    CHECK_THAT(curve[2].tpr, WithinAbs(1.0, 1e-12));
    CHECK_THAT(curve[2].fpr, WithinAbs(0.5, 1e-12));
}

TEST_CASE("roc auc is near one half for label-independent scores") {
    std::mt19937_64 rng(97);
    std::vector<ScoredLabel> scored;
    for (int i = 0; i < 10000; ++i)
        scored.emplace_back(static_cast<double>(rng() >> 11) * 0x1p-53, i % 2 == 0);
    CHECK_THAT(roc_auc(roc_points(scored)), WithinAbs(0.5, 0.05));
}

TEST_CASE("roc auc is invariant under strictly monotone score transforms") {
    std::mt19937_64 rng(101);
    std::vector<ScoredLabel> scored, transformed;
    for (int i = 0; i < 500; ++i) {
        const double s = static_cast<double>(rng() >> 11) * 0x1p-53;
        const bool positive = (static_cast<double>(rng() >> 11) * 0x1p-53) < s;
        scored.emplace_back(s, positive);
        transformed.emplace_back(std::exp(3.0 * s) + 7.0, positive);
    }
    CHECK_THAT(roc_auc(roc_points(scored)),
               WithinAbs(roc_auc(roc_points(transformed)), 1e-12));
}

TEST_CASE("stratified split: exact largest-remainder proportions") {
    const std::vector<TextRecord> records = make_records({{SentimentLabel::negative, 60},
                                                          {SentimentLabel::neutral, 20},
                                                          {SentimentLabel::positive, 20}});
    const SplitResult split = stratified_split(records, {0.8, 0.1, 0.1}, 7);
    CHECK(split.train.size() == 80);
    CHECK(split.validation.size() == 10);
    CHECK(split.test.size() == 10);
    auto count = [](const std::vector<TextRecord>& part, SentimentLabel l) {
        std::size_t n = 0;
        for (const auto& r : part)
            if (r.label == l) ++n;
        return n;
    };
    CHECK(count(split.test, SentimentLabel::negative) == 6);
    CHECK(count(split.test, SentimentLabel::neutral) == 2);
    CHECK(count(split.test, SentimentLabel::positive) == 2);
    CHECK(count(split.validation, SentimentLabel::negative) == 6);
}

TEST_CASE("stratified split: determinism and the partition property") {
    std::mt19937_64 rng(103);
    std::vector<TextRecord> records;
    for (int i = 0; i < 83; ++i) {
        TextRecord r;
        r.id = std::to_string(i);
        r.text = r.normalized = "t" + r.id;
        r.label = kCanonicalLabels[rng() % 3];
        records.push_back(std::move(r));
    }
    const SplitResult a = stratified_split(records, {0.8, 0.1, 0.1}, 42);
    const SplitResult b = stratified_split(records, {0.8, 0.1, 0.1}, 42);
    auto ids = [](const std::vector<TextRecord>& part) {
        std::vector<std::string> out;
        for (const auto& r : part) out.push_back(r.id);
        return out;
    };
    CHECK(ids(a.train) == ids(b.train));
    CHECK(ids(a.validation) == ids(b.validation));
    CHECK(ids(a.test) == ids(b.test));

    const SplitResult c = stratified_split(records, {0.8, 0.1, 0.1}, 43);
    CHECK(ids(a.train) != ids(c.train));  // different seed, different shuffle

    std::set<std::string> all;
    for (const auto* part : {&a.train, &a.validation, &a.test})
        for (const auto& r : *part) CHECK(all.insert(r.id).second);
    CHECK(all.size() == records.size());
}

TEST_CASE("stratified split rejects tiny strata and bad ratios") {
    const std::vector<TextRecord> tiny = make_records({{SentimentLabel::negative, 2},
                                                       {SentimentLabel::positive, 5}});
    CHECK_THROWS_AS(stratified_split(tiny, {0.8, 0.1, 0.1}, 1), Error);
    const std::vector<TextRecord> fine = make_records({{SentimentLabel::negative, 5},
                                                       {SentimentLabel::positive, 5}});
    CHECK_THROWS_AS(stratified_split(fine, {0.8, 0.1, 0.2}, 1), Error);
}

TEST_CASE("characteristic breakdown: membership, perfection, absent buckets") {
    std::vector<TextCharacteristics> cs(4);
    cs[0].has_negation = true;
    cs[0].length_bucket = LengthBucket::short_text;
    cs[1].length_bucket = LengthBucket::long_text;
    cs[2].mixed_emotions = true;
    cs[2].length_bucket = LengthBucket::medium_text;
    cs[2].has_contrast_connective = true;
    cs[3].length_bucket = LengthBucket::medium_text;
    cs[3].emotional_complexity = 5;

    const std::vector<SentimentLabel> gold = {SentimentLabel::positive, SentimentLabel::negative,
                                              SentimentLabel::neutral, SentimentLabel::positive};
    const std::vector<SentimentLabel> right = gold;
    const std::vector<BucketReport> perfect = characteristic_breakdown(cs, right, gold);
    for (const auto& b : perfect) CHECK(b.accuracy == 1.0);

    std::vector<std::string> names;
    for (const auto& b : perfect) names.push_back(b.bucket);
    CHECK(names == std::vector<std::string>{"negation", "short", "long", "mixed_emotions", "complex"});

    // complex = complexity >= threshold OR contrast connective
    const auto complex_row = perfect.back();
    CHECK(complex_row.count == 2);

    std::vector<TextCharacteristics> plain(2);
    plain[0].length_bucket = LengthBucket::medium_text;
    plain[1].length_bucket = LengthBucket::medium_text;
    const std::vector<SentimentLabel> two = {SentimentLabel::positive, SentimentLabel::negative};
    CHECK(characteristic_breakdown(plain, two, two).empty());  // nothing fires -> no rows
}

TEST_CASE("breakdown membership is prediction-independent") {
    std::vector<TextCharacteristics> cs(3);
    cs[0].has_negation = true;
    cs[1].mixed_emotions = true;
    cs[2].length_bucket = LengthBucket::long_text;
    const std::vector<SentimentLabel> gold(3, SentimentLabel::positive);
    const std::vector<SentimentLabel> right(3, SentimentLabel::positive);
    const std::vector<SentimentLabel> wrong(3, SentimentLabel::negative);
    const auto a = characteristic_breakdown(cs, right, gold);
    const auto b = characteristic_breakdown(cs, wrong, gold);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].bucket == b[i].bucket);
        CHECK(a[i].count == b[i].count);
    }
}
