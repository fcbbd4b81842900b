#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "sentifuse/data/dataset.hpp"
#include "sentifuse/error.hpp"

namespace sentifuse {

struct SplitResult {
    std::vector<TextRecord> train;
    std::vector<TextRecord> validation;
    std::vector<TextRecord> test;
};

namespace detail {

// Fisher-Yates with mt19937_64 and modulo draw: the standard engine is
// bit-reproducible across platforms, std::shuffle is not.
inline void deterministic_shuffle(std::vector<std::size_t>& items, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

// Largest-remainder allocation of `count` items over the ratios. Remainder
// ties go to the earlier split.
inline std::array<std::size_t, 3> largest_remainder(std::size_t count,
                                                    const std::array<double, 3>& ratios) {
    std::array<std::size_t, 3> alloc{};
    std::array<double, 3> frac{};
    std::size_t assigned = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        const double quota = static_cast<double>(count) * ratios[j];
        alloc[j] = static_cast<std::size_t>(std::floor(quota));
        frac[j] = quota - static_cast<double>(alloc[j]);
        assigned += alloc[j];
    }
    std::array<std::size_t, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
    for (std::size_t r = 0; assigned < count; ++r, ++assigned) ++alloc[order[r % 3]];
    return alloc;
}

}  // namespace detail

// Stratified 80-10-10-style split: per-label proportions preserved via
// largest-remainder allocation, per-label deterministic shuffle, splits
// emitted in original dataset order. Every present label needs >= 3 records.
inline SplitResult stratified_split(std::span<const TextRecord> records,
                                    const std::array<double, 3>& ratios, std::uint64_t seed) {
    double ratio_sum = 0.0;
    for (double r : ratios) {
        if (!(r >= 0.0)) throw Error(ErrorCategory::config, "split ratios must be non-negative");
        ratio_sum += r;
    }
    if (std::abs(ratio_sum - 1.0) > 1e-9)
        throw Error(ErrorCategory::config, "split ratios must sum to 1");

    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < records.size(); ++i)
        by_label[label_index(records[i].label)].push_back(i);
    for (const auto& [label, idx] : by_label) {
        if (idx.size() < 3)
            throw Error(ErrorCategory::config,
                        std::string("label '") + to_string(kCanonicalLabels[static_cast<std::size_t>(label)]) +
                            "' has fewer than 3 records; cannot stratify");
    }

    std::array<std::vector<std::size_t>, 3> parts;
    for (auto& [label, idx] : by_label) {
        detail::deterministic_shuffle(idx, seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(label + 1));
        const auto alloc = detail::largest_remainder(idx.size(), ratios);
        std::size_t cursor = 0;
        for (std::size_t part = 0; part < 3; ++part) {
            for (std::size_t k = 0; k < alloc[part]; ++k) parts[part].push_back(idx[cursor++]);
        }
    }

    SplitResult result;
    for (std::size_t part = 0; part < 3; ++part) {
        std::sort(parts[part].begin(), parts[part].end());
        auto& dest = part == 0 ? result.train : part == 1 ? result.validation : result.test;
        dest.reserve(parts[part].size());
        for (std::size_t i : parts[part]) dest.push_back(records[i]);
    }
    return result;
}

}  // namespace sentifuse
