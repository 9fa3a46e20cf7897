#pragma once

#include "codesift/core/errors.hpp"
#include "codesift/core/ground_truth.hpp"
#include "codesift/core/weights.hpp"
#include "codesift/store/compact.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace codesift::weightlearn {

class GroupTooSmall : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

class DegenerateData : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

class AllNonPositive : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

struct LabeledPair
{
    SimilarityVector sim{};
    int label = 0;   // 1 similar, 0 dissimilar
};

struct PairOptions
{
    std::size_t negatives_per_positive = 3;
    std::uint64_t seed = 0;
};

/// Every intra-group pair labeled 1, then negatives_per_positive times as many
/// distinct pairs of a group member with a member of another group or of
/// `negative_pool`, labeled 0. Deterministic under the seed.
[[nodiscard]] std::vector<LabeledPair> build_training_pairs(const Groups& groups, const store::SearchIndex& index,
                                                            const std::vector<std::uint32_t>& negative_pool,
                                                            const PairOptions& opts = {});

struct RawWeights
{
    std::array<double, kNumFeatureClasses> w{};
    double bias = 0.0;
};

struct TrainConfig
{
    double lambda = 1e-3;      // L2 regularization strength
    std::size_t epochs = 100;
    std::uint64_t seed = 0;
};

/// Linear max-margin classifier by stochastic subgradient descent on the
/// L2-regularized hinge loss (Pegasos), returning the averaged iterate.
/// DegenerateData unless both labels occur.
[[nodiscard]] RawWeights train_linear(const std::vector<LabeledPair>& pairs, const TrainConfig& cfg = {});

/// Fraction of pairs on the correct side of the separator.
[[nodiscard]] double training_accuracy(const RawWeights& raw, const std::vector<LabeledPair>& pairs);

/// w_c = max(raw_c, 0) / sum |raw_c|; the bias is dropped. AllNonPositive if no coefficient is positive.
[[nodiscard]] WeightProfile finalize_weights(const RawWeights& raw);

} // namespace codesift::weightlearn
