#pragma once

#include "codesift/core/weights.hpp"
#include "codesift/store/compact.hpp"
#include "codesift/store/database.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace codesift::dynselect {

class SampleTooLarge : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

struct SelectionConfig
{
    double t_uniq = 0.15;
    std::size_t n_samp = 200;
};

/// Index positions of sampled records.
struct SamplePool
{
    std::vector<std::uint32_t> members;
    std::uint64_t seed = 0;
};

/// Per-class mean + population standard deviation of pairwise sample similarities.
struct ClassThresholds
{
    std::array<double, kNumFeatureClasses> threshold{};
    std::uint64_t seed = 0;
    std::size_t n_samp = 0;

    bool operator==(const ClassThresholds&) const = default;
};

/// Uniform sample without replacement from `population` (all positions when
/// null), reproducible from `seed`. SampleTooLarge if n_samp exceeds the population.
[[nodiscard]] SamplePool draw_sample(const store::SearchIndex& index, std::size_t n_samp, std::uint64_t seed,
                                     const std::vector<std::uint32_t>* population = nullptr);

/// InvalidArgument for fewer than two members.
[[nodiscard]] ClassThresholds class_thresholds(const store::SearchIndex& index, const SamplePool& pool);

/// w_c = 1 when fewer than t_uniq of the sample score strictly above the
/// class threshold against the query, else 0. All-zero falls back to equal
/// weights with `fallback` set.
[[nodiscard]] WeightProfile select_classes(const store::SearchIndex& index, const store::CompactVector& query,
                                           const SamplePool& pool, const ClassThresholds& th,
                                           const SelectionConfig& cfg);

/// Offline step cached next to a database: the sample and its thresholds,
/// keyed by database digest, seed and sample size.
struct ThresholdSidecar
{
    std::string db_digest;
    std::vector<std::string> sample_ids;
    ClassThresholds thresholds;
};

[[nodiscard]] ThresholdSidecar compute_sidecar(const store::CodeDatabase& db, std::size_t n_samp, std::uint64_t seed);
void save_sidecar(const ThresholdSidecar& s, const std::filesystem::path& path);
[[nodiscard]] ThresholdSidecar load_sidecar(const std::filesystem::path& path);
/// Loads the sidecar when it exists and matches (db digest, seed, n_samp); otherwise computes it.
[[nodiscard]] ThresholdSidecar sidecar_for(const store::CodeDatabase& db, std::size_t n_samp, std::uint64_t seed,
                                           const std::optional<std::filesystem::path>& path);
/// Default sidecar location: "<db>.thresholds.json".
[[nodiscard]] std::filesystem::path default_sidecar_path(const std::filesystem::path& db_path);

/// Resolves sidecar sample ids back to index positions (MissingId on a stale id).
[[nodiscard]] SamplePool pool_from_sidecar(const store::SearchIndex& index, const ThresholdSidecar& s);

} // namespace codesift::dynselect
