#pragma once

#include "codesift/core/feature_class.hpp"

#include <array>
#include <filesystem>
#include <numeric>
#include <string>

#include <json.hpp>

namespace codesift {

/// Per-class similarity scores for one pair of functions.
using SimilarityVector = std::array<double, kNumFeatureClasses>;

/// Feature-class weights for the combined similarity.
struct WeightProfile
{
    std::array<double, kNumFeatureClasses> w{};
    /// Set when dynamic selection deselected every class and fell back to equal weights.
    bool fallback = false;

    [[nodiscard]] double operator[](FeatureClass c) const noexcept { return w[index_of(c)]; }
    double& operator[](FeatureClass c) noexcept { return w[index_of(c)]; }

    [[nodiscard]] double sum() const noexcept { return std::accumulate(w.begin(), w.end(), 0.0); }

    [[nodiscard]] static WeightProfile equal_all() noexcept
    {
        WeightProfile p;
        p.w.fill(1.0);
        return p;
    }

    [[nodiscard]] static WeightProfile solo(FeatureClass c) noexcept
    {
        WeightProfile p;
        p[c] = 1.0;
        return p;
    }

    bool operator==(const WeightProfile&) const = default;
};

/// {class id -> weight}. Unknown keys and negative/non-finite weights are rejected with FormatError.
[[nodiscard]] nlohmann::json to_json(const WeightProfile& profile);
[[nodiscard]] WeightProfile weight_profile_from_json(const nlohmann::json& j);

void save_weight_profile(const WeightProfile& profile, const std::filesystem::path& path);
[[nodiscard]] WeightProfile load_weight_profile(const std::filesystem::path& path);

} // namespace codesift
