#include "codesift/core/ground_truth.hpp"

#include "codesift/core/errors.hpp"

#include <fstream>
#include <set>

namespace codesift {

void validate(const GroundTruth& gt)
{
    std::set<std::string> seen;
    for (const auto& [name, ids] : gt.groups) {
        if (ids.size() < 2) {
            throw FormatError("ground-truth group '" + name + "' needs at least two members");
        }
        for (const auto& id : ids) {
            if (!seen.insert(id).second) {
                throw FormatError("function '" + id + "' appears in more than one ground-truth group");
            }
        }
    }
}

GroundTruth ground_truth_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("groups") || !j.at("groups").is_object()) {
        throw FormatError("ground truth needs a \"groups\" object");
    }
    GroundTruth gt;
    gt.domain = j.value("domain", std::string());
    for (const auto& [name, ids] : j.at("groups").items()) {
        if (!ids.is_array()) {
            throw FormatError("ground-truth group '" + name + "' must be an array of ids");
        }
        auto& members = gt.groups[name];
        for (const auto& id : ids) {
            if (!id.is_string()) {
                throw FormatError("ground-truth group '" + name + "' has a non-string id");
            }
            members.push_back(id.get<std::string>());
        }
    }
    validate(gt);
    return gt;
}

nlohmann::json to_json(const GroundTruth& gt)
{
    nlohmann::json groups = nlohmann::json::object();
    for (const auto& [name, ids] : gt.groups) {
        groups[name] = ids;
    }
    return {{"domain", gt.domain}, {"groups", groups}};
}

GroundTruth load_ground_truth(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return ground_truth_from_json(j);
}

} // namespace codesift
