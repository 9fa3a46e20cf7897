#pragma once

#include "codesift/features/nl.hpp"
#include "codesift/frontend/manifest.hpp"
#include "codesift/store/database.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace codesift::store {

/// Shared extraction resources loaded from the data directory.
struct ExtractionResources
{
    features::NlPipeline nl;
    std::map<std::string, std::string> modeled;

    [[nodiscard]] static ExtractionResources load(const std::filesystem::path& data_dir);
};

struct IndexOptions
{
    bool keep_source = true;
    /// Skip files that fail to parse instead of aborting; each is reported through `on_skip`.
    bool skip_unparseable = false;
    std::function<void(const ParseError&)> on_skip;
};

/// Two passes: parse every unit and count definitions and IDF per project,
/// then extract one record per function.
[[nodiscard]] CodeDatabase build_database(const std::vector<frontend::ManifestUnit>& units,
                                          const ExtractionResources& res, const IndexOptions& opts = {});

[[nodiscard]] CodeDatabase build_database(const std::filesystem::path& manifest_path, const ExtractionResources& res,
                                          const IndexOptions& opts = {});

/// Parses a query file that must hold exactly one function definition
/// (InvalidArgument otherwise). A file inside the database's corpus root is
/// placed like an indexed file, so it resolves calls and IDF the same way.
[[nodiscard]] frontend::FunctionIR parse_query(const std::filesystem::path& path, const CodeDatabase& db);
[[nodiscard]] frontend::FunctionIR parse_query_text(const std::string& text, const std::string& path,
                                                    const std::string& project_id);

/// Feature-vector of a query against the database's corpus context: its own
/// project's IDF table when the project is indexed, else all projects merged.
[[nodiscard]] FeatureVector query_vector(frontend::FunctionIR& ir, const CodeDatabase& db,
                                         const ExtractionResources& res);

} // namespace codesift::store
