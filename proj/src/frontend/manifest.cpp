#include "codesift/frontend/manifest.hpp"

#include "codesift/core/errors.hpp"
#include "codesift/core/hash.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace codesift::frontend {

namespace fs = std::filesystem;

std::string read_text_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Manifest load_manifest(const fs::path& path)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    const nlohmann::json* list = &j;
    if (j.is_object()) {
        if (!j.contains("files")) {
            throw FormatError(path.string() + ": manifest object needs a \"files\" array");
        }
        list = &j.at("files");
    }
    if (!list->is_array()) {
        throw FormatError(path.string() + ": manifest must list entries in an array");
    }
    Manifest m;
    m.root = path.parent_path();
    for (const auto& e : *list) {
        if (!e.is_object() || !e.contains("path") || !e.at("path").is_string()) {
            throw FormatError(path.string() + ": every manifest entry needs a string \"path\"");
        }
        ManifestEntry entry;
        entry.path = e.at("path").get<std::string>();
        entry.project_id = e.value("project_id", std::string("default"));
        entry.distractor = e.value("distractor", false);
        m.entries.push_back(std::move(entry));
    }
    return m;
}

std::vector<ManifestUnit> read_units(const Manifest& manifest)
{
    std::vector<ManifestUnit> units;
    auto add = [&](const fs::path& file, const ManifestEntry& entry) {
        ManifestUnit u;
        u.unit.path = fs::relative(file, manifest.root.empty() ? fs::path(".") : manifest.root).generic_string();
        u.unit.text = read_text_file(file);
        u.unit.project_id = entry.project_id;
        u.distractor = entry.distractor;
        units.push_back(std::move(u));
    };
    for (const auto& entry : manifest.entries) {
        fs::path full = manifest.root / entry.path;
        if (fs::is_directory(full)) {
            std::vector<fs::path> files;
            for (const auto& f : fs::recursive_directory_iterator(full)) {
                if (f.is_regular_file() && f.path().extension() == ".c") {
                    files.push_back(f.path());
                }
            }
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                add(f, entry);
            }
        } else if (fs::exists(full)) {
            add(full, entry);
        } else {
            throw IoError("manifest entry not found: " + full.string());
        }
    }
    return units;
}

std::string manifest_digest(const std::vector<ManifestUnit>& units)
{
    Fnv1a h;
    for (const auto& u : units) {
        h.field(u.unit.path).field(u.unit.project_id).field(u.distractor ? "1" : "0").field(u.unit.text);
    }
    return h.hex();
}

} // namespace codesift::frontend
