#pragma once

#include "codesift/frontend/function_ir.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace codesift::frontend {

struct ManifestEntry
{
    std::string path;         // relative to the manifest's directory; may name a directory
    std::string project_id;
    bool distractor = false;
};

/// Corpus manifest: a JSON array of {path, project_id[, distractor]} or an
/// object {"files": [...]}. Directory entries expand to every *.c file below them.
struct Manifest
{
    std::filesystem::path root;
    std::vector<ManifestEntry> entries;
};

struct ManifestUnit
{
    SourceUnit unit;
    bool distractor = false;
};

[[nodiscard]] Manifest load_manifest(const std::filesystem::path& path);

/// Reads every source file named by the manifest, in entry order with
/// directory contents sorted by path. Unit paths stay relative to `root`.
[[nodiscard]] std::vector<ManifestUnit> read_units(const Manifest& manifest);

/// Digest over entry metadata and file contents.
[[nodiscard]] std::string manifest_digest(const std::vector<ManifestUnit>& units);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

} // namespace codesift::frontend
