#pragma once

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentifuse/core/tokenize.hpp"
#include "sentifuse/error.hpp"

namespace sentifuse {

// Sparse document vector over a fixed vocabulary; indices strictly increasing.
struct SparseVector {
    std::vector<std::pair<int, double>> entries;

    std::vector<double> to_dense(std::size_t dim) const {
        std::vector<double> dense(dim, 0.0);
        for (const auto& [idx, value] : entries) dense[static_cast<std::size_t>(idx)] = value;
        return dense;
    }
};

struct TfidfVocabulary {
    std::vector<std::string> terms;  // lexicographic; index = position
    std::vector<double> idf;         // aligned with terms
    std::map<std::string, int> index;

    std::size_t size() const { return terms.size(); }
};

// Fits vocabulary and smoothed idf: idf(t) = ln((N+1)/(df+1)) + 1.
// Terms below min_df are dropped; ordering is lexicographic.
inline TfidfVocabulary tfidf_fit(const std::vector<std::string>& corpus, int min_df) {
    if (corpus.empty()) throw Error(ErrorCategory::config, "tfidf corpus is empty");
    std::map<std::string, int> doc_freq;
    for (const auto& text : corpus) {
        std::map<std::string, bool> seen;
        for (const auto& tok : tokenize(text)) seen[tok] = true;
        for (const auto& [term, _] : seen) ++doc_freq[term];
    }
    TfidfVocabulary vocab;
    const double n = static_cast<double>(corpus.size());
    for (const auto& [term, df] : doc_freq) {
        if (df < min_df) continue;
        vocab.index.emplace(term, static_cast<int>(vocab.terms.size()));
        vocab.terms.push_back(term);
        vocab.idf.push_back(std::log((n + 1.0) / (static_cast<double>(df) + 1.0)) + 1.0);
    }
    return vocab;
}

// Raw term counts scaled by idf, then L2-normalized. Out-of-vocabulary
// terms are ignored; a document with no known terms stays all-zero.
inline SparseVector tfidf_transform(const TfidfVocabulary& vocab, std::string_view text) {
    std::map<int, double> counts;
    for (const auto& tok : tokenize(text)) {
        auto it = vocab.index.find(tok);
        if (it != vocab.index.end()) counts[it->second] += 1.0;
    }
    SparseVector vec;
    double norm_sq = 0.0;
    for (const auto& [idx, count] : counts) {
        const double v = count * vocab.idf[static_cast<std::size_t>(idx)];
        vec.entries.emplace_back(idx, v);
        norm_sq += v * v;
    }
    if (norm_sq > 0.0) {
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& [_, v] : vec.entries) v *= inv;
    }
    return vec;
}

}  // namespace sentifuse
