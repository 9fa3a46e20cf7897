#pragma once

#include "codesift/core/observation.hpp"
#include "codesift/frontend/function_ir.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace codesift::features {

enum class LibCategory
{
    Modeled,
    Unmodeled,
    UserDefined,
};

/// Where each corpus function is defined, plus the bundled standard-library models.
struct CorpusIndex
{
    /// function name -> directories holding a definition
    std::map<std::string, std::set<std::string>> defined_functions;
    /// modeled function name -> declaring header
    std::map<std::string, std::string> modeled_names;

    void add_definition(const std::string& name, const std::string& directory);
    void add_functions(const std::vector<frontend::FunctionIR>& functions);

    [[nodiscard]] bool is_modeled(const std::string& name) const { return modeled_names.count(name) != 0; }

    bool operator==(const CorpusIndex&) const = default;
};

/// JSON array of {"name", "header"}; an object with a "functions" array is also accepted.
[[nodiscard]] std::map<std::string, std::string> load_modeled_functions(const std::filesystem::path& path);

/// Fills status, header and definition_dir of every call site. A callee
/// defined in the caller's directory is Local, one defined only elsewhere is
/// UserDefined (reporting the lexicographically first directory), otherwise
/// Modeled or Unmodeled.
void resolve_calls(frontend::FunctionIR& ir, const CorpusIndex& index);

/// The three library-call classes. Each category is decided independently
/// from the index, so a corpus function that shadows a modeled name can
/// appear in both the modeled and the user-defined set.
[[nodiscard]] PairSet extract_library_calls(const frontend::FunctionIR& ir, const CorpusIndex& index,
                                            LibCategory category);

} // namespace codesift::features
