#pragma once

#include "codesift/store/database.hpp"

#include <filesystem>
#include <string_view>

#include <json.hpp>

namespace codesift::store {

inline constexpr int kFormatVersion = 1;

// Sets are sorted arrays (pairs as [a, b]), multisets are element -> count
// objects, trees are nested [label, [children...]] with null for the empty
// tree, and weighted terms are term -> score objects.
[[nodiscard]] nlohmann::json observation_to_json(const FeatureObservation& obs);
[[nodiscard]] FeatureObservation observation_from_json(const nlohmann::json& j, ObservationKind kind);

/// Object keyed by feature-class id; missing classes read back as empty observations.
[[nodiscard]] nlohmann::json feature_vector_to_json(const FeatureVector& fv);
[[nodiscard]] FeatureVector feature_vector_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json record_to_json(const FunctionRecord& rec);
[[nodiscard]] FunctionRecord record_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json database_to_json(const CodeDatabase& db);
/// Throws FormatError on malformed content and VersionMismatch when the
/// stored extractor version differs from `expected_extractor_version`
/// (an empty expectation accepts any version).
[[nodiscard]] CodeDatabase database_from_json(const nlohmann::json& j, std::string_view expected_extractor_version);

void save_database(const CodeDatabase& db, const std::filesystem::path& path);
[[nodiscard]] CodeDatabase load_database(const std::filesystem::path& path,
                                         std::string_view expected_extractor_version);

} // namespace codesift::store
