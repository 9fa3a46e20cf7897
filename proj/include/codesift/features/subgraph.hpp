#pragma once

#include "codesift/core/observation.hpp"
#include "codesift/frontend/cfg.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace codesift::features {

/// Square 0/1 adjacency matrix; row i lists the edges leaving node i.
using AdjacencyMatrix = std::vector<std::vector<std::uint8_t>>;

enum class Traversal
{
    Bfs,
    Dfs,
};

/// Rows concatenated in order, row 0 in the most significant bits. k must be 3 or 4.
[[nodiscard]] std::uint64_t encode_subgraph(const AdjacencyMatrix& m);
[[nodiscard]] AdjacencyMatrix decode_subgraph(std::uint64_t code, std::size_t k);

/// Nodes visited from `start` in traversal order, stopping after `k` nodes.
/// Successors are taken in CFG edge order; DFS is preorder.
[[nodiscard]] std::vector<std::size_t> traverse(const frontend::Cfg& cfg, std::size_t start, std::size_t k,
                                                Traversal strategy);

/// Encodes the subgraph induced by a k-node traversal from every node;
/// traversals that reach fewer than k nodes are discarded.
[[nodiscard]] ShapeMultiset extract_cfg_subgraphs(const frontend::Cfg& cfg, std::size_t k, Traversal strategy);

} // namespace codesift::features
