#pragma once

#include "codesift/frontend/ast.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace codesift::frontend {

/// One CFG node per executable statement: declarations, expression statements,
/// returns, branch/loop conditions and for-loop init/step clauses. Nodes are
/// numbered in source order; `break`, `continue` and block structure only shape edges.
struct CfgNode
{
    std::string label;   // statement kind, e.g. "while-cond", "expr", "return"
    std::size_t offset = 0;
    std::size_t line = 1;
    bool reachable = true;

    bool operator==(const CfgNode&) const = default;
};

struct Cfg
{
    std::vector<CfgNode> nodes;
    /// Ordered successors: then-branch before else, loop body before loop exit,
    /// switch cases in source order.
    std::vector<std::vector<std::size_t>> successors;
    std::size_t entry = 0;

    [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
    [[nodiscard]] bool empty() const noexcept { return nodes.empty(); }

    bool operator==(const Cfg&) const = default;
};

/// Builds the statement-level CFG of a function-def node. A function with an
/// empty body yields an empty Cfg.
[[nodiscard]] Cfg build_cfg(const AstNode& function_def);

} // namespace codesift::frontend
