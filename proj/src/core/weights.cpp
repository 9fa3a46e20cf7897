#include "codesift/core/weights.hpp"

#include "codesift/core/errors.hpp"

#include <cmath>
#include <fstream>

namespace codesift {

nlohmann::json to_json(const WeightProfile& profile)
{
    nlohmann::json j = nlohmann::json::object();
    for (FeatureClass c : kAllFeatureClasses) {
        j[std::string(to_string(c))] = profile[c];
    }
    return j;
}

WeightProfile weight_profile_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) {
        throw FormatError("weight profile must be a JSON object");
    }
    WeightProfile profile;
    for (const auto& [key, value] : j.items()) {
        auto c = parse_feature_class(key);
        if (!c) {
            throw FormatError("unknown feature-class '" + key + "' in weight profile");
        }
        if (!value.is_number()) {
            throw FormatError("weight for '" + key + "' is not a number");
        }
        double w = value.get<double>();
        if (!std::isfinite(w) || w < 0.0) {
            throw FormatError("weight for '" + key + "' must be finite and non-negative");
        }
        profile[*c] = w;
    }
    return profile;
}

void save_weight_profile(const WeightProfile& profile, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << to_json(profile).dump(2) << '\n';
}

WeightProfile load_weight_profile(const std::filesystem::path& path)
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
    return weight_profile_from_json(j);
}

} // namespace codesift
