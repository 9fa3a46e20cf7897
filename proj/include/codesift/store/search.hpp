#pragma once

#include "codesift/core/weights.hpp"
#include "codesift/store/compact.hpp"
#include "codesift/store/database.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace codesift::store {

struct RankedEntry
{
    std::string id;
    double score = 0.0;
    SimilarityVector breakdown{};

    bool operator==(const RankedEntry&) const = default;
};

/// Scores non-increasing, ties by ascending id, at most k_requested entries.
struct RankedList
{
    std::vector<RankedEntry> entries;
    std::size_t k_requested = 0;

    bool operator==(const RankedList&) const = default;
};

struct SearchOptions
{
    /// Scan shards run on this many threads; 0 picks the hardware concurrency.
    std::size_t threads = 1;
    /// When set, only these index positions are scanned.
    const std::vector<std::uint32_t>* candidates = nullptr;
};

/// The k records with the highest combined similarity to `query`, by
/// exhaustive scan. Throws ZeroWeightSum when no weight is positive and
/// InvalidArgument when k is 0.
[[nodiscard]] RankedList top_k(const SearchIndex& index, const CompactVector& query, const WeightProfile& w,
                               std::size_t k, const SearchOptions& opts = {});

[[nodiscard]] RankedList top_k(const CodeDatabase& db, const FeatureVector& query, const WeightProfile& w,
                               std::size_t k, const SearchOptions& opts = {});

} // namespace codesift::store
