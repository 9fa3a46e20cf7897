#pragma once

#include "codesift/core/observation.hpp"
#include "codesift/core/weights.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace codesift::simkit {

struct TreeDistanceConfig
{
    /// Size-ratio distance at or above which the traversal comparison is skipped.
    double d_t = 0.5;
};

// Every similarity returns 1.0 when both observations are empty and 0.0 when
// exactly one is.

[[nodiscard]] double jaccard(const TermSet& a, const TermSet& b);
[[nodiscard]] double jaccard(const PairSet& a, const PairSet& b);

/// Sum of per-element minimum counts over sum of maximum counts.
[[nodiscard]] double generalized_jaccard(const ShapeMultiset& a, const ShapeMultiset& b);
[[nodiscard]] double generalized_jaccard(const TypeMultiset& a, const TypeMultiset& b);

/// Dot product over the product of norms, clamped to 1.
[[nodiscard]] double cosine_weighted(const WeightedTermMap& a, const WeightedTermMap& b);

/// Levenshtein distance over label tokens.
[[nodiscard]] std::size_t sequence_edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// 1 - d_r when the size ratio distance d_r reaches cfg.d_t, else
/// 1 - max(Ed(preorder), Ed(postorder)) / max(size).
[[nodiscard]] double tree_similarity(const LabeledTree& a, const LabeledTree& b, const TreeDistanceConfig& cfg = {});

/// Class-appropriate similarity of two observations; KindMismatch if their variants differ.
[[nodiscard]] double observation_similarity(const FeatureObservation& a, const FeatureObservation& b,
                                            const TreeDistanceConfig& cfg = {});

[[nodiscard]] SimilarityVector similarity_vector(const FeatureVector& a, const FeatureVector& b,
                                                 const TreeDistanceConfig& cfg = {});

/// Weighted average over the classes, summed in class order. ZeroWeightSum if no weight is positive.
[[nodiscard]] double combined_similarity(const SimilarityVector& sv, const WeightProfile& w);

} // namespace codesift::simkit
