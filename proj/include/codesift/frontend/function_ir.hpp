#pragma once

#include "codesift/frontend/ast.hpp"
#include "codesift/frontend/cfg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace codesift::frontend {

struct SourceUnit
{
    std::string path;
    std::string text;
    std::string project_id;
};

struct Variable
{
    std::string name;
    std::string type;

    bool operator==(const Variable&) const = default;
};

enum class CallResolution
{
    Unresolved,   // not yet resolved against a corpus index
    Local,        // defined in the caller's directory
    UserDefined,  // defined in another directory of the corpus
    Modeled,      // in the bundled standard-library model list
    Unmodeled,    // neither defined in the corpus nor modeled
};

[[nodiscard]] std::string_view to_string(CallResolution r) noexcept;

struct CallSite
{
    std::string callee;
    CallResolution status = CallResolution::Unresolved;
    std::string header;          // declaring header, for modeled calls
    std::string definition_dir;  // for corpus-defined callees
    std::size_t line = 1;

    bool operator==(const CallSite&) const = default;
};

struct SourceSpan
{
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const SourceSpan&) const = default;
};

struct FunctionIR
{
    std::string id;           // "<path>:<name>:<line>"
    std::string name;
    std::string path;
    std::string directory;    // parent directory of `path` ("" for top level)
    std::string project_id;
    std::size_t line = 1;
    std::vector<Variable> params;
    std::string return_type;
    std::vector<Variable> locals;
    AstNode ast;
    Cfg cfg;
    std::vector<std::string> comments;
    std::vector<CallSite> calls;
    SourceSpan span;
    std::string source_text;

    bool operator==(const FunctionIR&) const = default;
};

[[nodiscard]] std::string make_function_id(const std::string& path, const std::string& name, std::size_t line);

} // namespace codesift::frontend
