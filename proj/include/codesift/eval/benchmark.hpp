#pragma once

#include "codesift/core/errors.hpp"
#include "codesift/core/ground_truth.hpp"
#include "codesift/dynselect/dynselect.hpp"
#include "codesift/store/database.hpp"
#include "codesift/store/indexer.hpp"
#include "codesift/weightlearn/weightlearn.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace codesift::eval {

class InsufficientDistractors : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

class TooManyFolds : public InvalidArgument
{
  public:
    using InvalidArgument::InvalidArgument;
};

enum class ConfigKind
{
    Solo,
    EqualAll,
    DynSelect,
    RandSelect,
    SvmWeights,
    SvmWeightsCross,
};

struct EvalConfig
{
    ConfigKind kind = ConfigKind::EqualAll;
    FeatureClass solo = FeatureClass::TypeOpCoupling;
    /// Distractors mixed into every query's search set; 0 takes the whole pool.
    std::size_t distractor_count = 0;
    std::uint64_t seed = 0;
    /// rand-select repetitions.
    std::size_t trials = 10;
    /// svm-weights folds over groups; 0 means leave-one-group-out.
    std::size_t folds = 0;
    /// svm-weights-cross weight profile.
    std::filesystem::path profile;
    dynselect::SelectionConfig selection;
    weightlearn::PairOptions pairs;
    weightlearn::TrainConfig train;
};

/// "solo-<class>", "equal-all", "dyn-select", "rand-select", "svm-weights", "svm-weights-cross".
[[nodiscard]] std::string config_name(const EvalConfig& cfg);
/// Parses a configuration name; "solo-<class>" selects the class.
[[nodiscard]] EvalConfig parse_config_name(const std::string& name);

struct QueryResult
{
    std::string query;
    std::string group;
    double ap = 0.0;
};

struct ConfigReport
{
    std::string name;
    std::vector<QueryResult> queries;   // ordered by query id
    double map = 0.0;
    double seconds = 0.0;
    std::size_t distractors = 0;
    /// Queries whose dyn-select weights fell back to equal-all, or folds whose training failed.
    std::size_t fallbacks = 0;
};

struct EvalReport
{
    std::string domain;
    std::vector<ConfigReport> configs;
};

/// Group names per fold: (train groups, test groups). Groups are shuffled
/// under `seed` and dealt round-robin. TooManyFolds unless 2 <= folds <= groups.
[[nodiscard]] std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
kfold_split(const GroundTruth& gt, std::size_t folds, std::uint64_t seed);

/// Positions of the distractor pool: records flagged as distractors, or,
/// when none are flagged, every record outside the ground-truth groups.
[[nodiscard]] std::vector<std::uint32_t> distractor_pool(const GroundTruth& gt, const store::CodeDatabase& db);

/// Every member of every group queries a search set made of its group-mates
/// and the sampled distractors; AP is computed over the full ranking.
[[nodiscard]] ConfigReport run_benchmark(const GroundTruth& gt, const store::CodeDatabase& db, const EvalConfig& cfg);

[[nodiscard]] nlohmann::json to_json(const EvalReport& report);
[[nodiscard]] std::string to_text(const EvalReport& report);

struct SweepRow
{
    std::size_t distractors = 0;
    std::string configuration;
    double map = 0.0;
};

/// MAP of each configuration at each distractor count (counts above the pool size are capped).
[[nodiscard]] std::vector<SweepRow> distractor_sweep(const GroundTruth& gt, const store::CodeDatabase& db,
                                                     const std::vector<EvalConfig>& configs,
                                                     const std::vector<std::size_t>& counts);
[[nodiscard]] std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Indexes a manifest together with `synthetic` generated distractor
/// functions that share the manifest's first project id.
[[nodiscard]] store::CodeDatabase build_benchmark_database(const std::filesystem::path& manifest,
                                                           const store::ExtractionResources& res,
                                                           std::size_t synthetic, std::uint64_t seed,
                                                           const store::IndexOptions& opts = {});

} // namespace codesift::eval
