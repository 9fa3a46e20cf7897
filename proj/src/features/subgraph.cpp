#include "codesift/features/subgraph.hpp"

#include "codesift/core/errors.hpp"

#include <algorithm>
#include <deque>

namespace codesift::features {

namespace {

void check_k(std::size_t k)
{
    if (k != 3 && k != 4) {
        throw InvalidArgument("subgraph size must be 3 or 4, got " + std::to_string(k));
    }
}

void dfs(const frontend::Cfg& cfg, std::size_t n, std::size_t k, std::vector<char>& seen,
         std::vector<std::size_t>& order)
{
    if (order.size() == k) {
        return;
    }
    seen[n] = 1;
    order.push_back(n);
    for (std::size_t s : cfg.successors[n]) {
        if (order.size() == k) {
            return;
        }
        if (!seen[s]) {
            dfs(cfg, s, k, seen, order);
        }
    }
}

} // namespace

std::uint64_t encode_subgraph(const AdjacencyMatrix& m)
{
    check_k(m.size());
    std::uint64_t code = 0;
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw InvalidArgument("adjacency matrix must be square");
        }
        for (std::uint8_t bit : row) {
            code = (code << 1) | (bit != 0 ? 1U : 0U);
        }
    }
    return code;
}

AdjacencyMatrix decode_subgraph(std::uint64_t code, std::size_t k)
{
    check_k(k);
    AdjacencyMatrix m(k, std::vector<std::uint8_t>(k, 0));
    std::size_t bit = k * k;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            --bit;
            m[i][j] = static_cast<std::uint8_t>((code >> bit) & 1U);
        }
    }
    return m;
}

std::vector<std::size_t> traverse(const frontend::Cfg& cfg, std::size_t start, std::size_t k, Traversal strategy)
{
    std::vector<std::size_t> order;
    std::vector<char> seen(cfg.size(), 0);
    if (strategy == Traversal::Dfs) {
        dfs(cfg, start, k, seen, order);
        return order;
    }
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty() && order.size() < k) {
        std::size_t n = queue.front();
        queue.pop_front();
        order.push_back(n);
        for (std::size_t s : cfg.successors[n]) {
            if (!seen[s]) {
                seen[s] = 1;
                queue.push_back(s);
            }
        }
    }
    return order;
}

ShapeMultiset extract_cfg_subgraphs(const frontend::Cfg& cfg, std::size_t k, Traversal strategy)
{
    check_k(k);
    ShapeMultiset out;
    for (std::size_t start = 0; start < cfg.size(); ++start) {
        auto order = traverse(cfg, start, k, strategy);
        if (order.size() < k) {
            continue;
        }
        AdjacencyMatrix m(k, std::vector<std::uint8_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            const auto& succ = cfg.successors[order[i]];
            for (std::size_t j = 0; j < k; ++j) {
                m[i][j] = std::find(succ.begin(), succ.end(), order[j]) != succ.end() ? 1 : 0;
            }
        }
        ++out[encode_subgraph(m)];
    }
    return out;
}

} // namespace codesift::features
