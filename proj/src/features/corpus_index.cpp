#include "codesift/features/corpus_index.hpp"

#include "codesift/core/errors.hpp"
#include "codesift/frontend/manifest.hpp"

#include <json.hpp>

namespace codesift::features {

void CorpusIndex::add_definition(const std::string& name, const std::string& directory)
{
    defined_functions[name].insert(directory);
}

void CorpusIndex::add_functions(const std::vector<frontend::FunctionIR>& functions)
{
    for (const auto& f : functions) {
        add_definition(f.name, f.directory);
    }
}

std::map<std::string, std::string> load_modeled_functions(const std::filesystem::path& path)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(frontend::read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    const nlohmann::json* list = &j;
    if (j.is_object() && j.contains("functions")) {
        list = &j.at("functions");
    }
    if (!list->is_array()) {
        throw FormatError(path.string() + ": modeled function list must be an array");
    }
    std::map<std::string, std::string> out;
    for (const auto& e : *list) {
        if (!e.is_object() || !e.contains("name") || !e.contains("header") || !e.at("name").is_string() ||
            !e.at("header").is_string()) {
            throw FormatError(path.string() + ": modeled entries need string \"name\" and \"header\"");
        }
        out.emplace(e.at("name").get<std::string>(), e.at("header").get<std::string>());
    }
    return out;
}

void resolve_calls(frontend::FunctionIR& ir, const CorpusIndex& index)
{
    using frontend::CallResolution;
    for (auto& call : ir.calls) {
        call.header.clear();
        call.definition_dir.clear();
        auto def = index.defined_functions.find(call.callee);
        auto model = index.modeled_names.find(call.callee);
        if (model != index.modeled_names.end()) {
            call.header = model->second;
        }
        if (def != index.defined_functions.end() && !def->second.empty()) {
            if (def->second.count(ir.directory) != 0) {
                call.status = CallResolution::Local;
                call.definition_dir = ir.directory;
            } else {
                call.status = CallResolution::UserDefined;
                call.definition_dir = *def->second.begin();
            }
        } else if (model != index.modeled_names.end()) {
            call.status = CallResolution::Modeled;
        } else {
            call.status = CallResolution::Unmodeled;
        }
    }
}

PairSet extract_library_calls(const frontend::FunctionIR& ir, const CorpusIndex& index, LibCategory category)
{
    PairSet out;
    for (const auto& call : ir.calls) {
        auto def = index.defined_functions.find(call.callee);
        bool defined = def != index.defined_functions.end() && !def->second.empty();
        switch (category) {
        case LibCategory::Modeled:
            if (auto m = index.modeled_names.find(call.callee); m != index.modeled_names.end()) {
                out.emplace(call.callee, m->second);
            }
            break;
        case LibCategory::Unmodeled:
            if (!defined && !index.is_modeled(call.callee)) {
                out.emplace(call.callee, "");
            }
            break;
        case LibCategory::UserDefined:
            if (defined && def->second.count(ir.directory) == 0) {
                out.emplace(call.callee, *def->second.begin());
            }
            break;
        }
    }
    return out;
}

} // namespace codesift::features
