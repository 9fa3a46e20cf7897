#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace codesift {

/// Named groups of mutually similar function ids.
using Groups = std::map<std::string, std::vector<std::string>>;

struct GroundTruth
{
    std::string domain;
    Groups groups;

    bool operator==(const GroundTruth&) const = default;
};

/// Throws FormatError unless groups are disjoint and each has at least two members.
void validate(const GroundTruth& gt);

/// {"domain": ..., "groups": {name: [ids]}}
[[nodiscard]] GroundTruth ground_truth_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json to_json(const GroundTruth& gt);
[[nodiscard]] GroundTruth load_ground_truth(const std::filesystem::path& path);

} // namespace codesift
