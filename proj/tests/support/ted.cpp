#include "ted.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace codesift::testkit {

namespace {

struct Postorder
{
    std::vector<std::string> label;   // 1-based
    std::vector<std::size_t> leftmost;
    std::vector<std::size_t> keyroots;

    explicit Postorder(const LabeledTree& t)
    {
        label.emplace_back();
        leftmost.push_back(0);
        if (t.root) {
            visit(*t.root);
        }
        std::size_t n = label.size() - 1;
        std::vector<bool> seen(n + 1, false);
        for (std::size_t i = n; i >= 1; --i) {
            if (!seen[leftmost[i]]) {
                keyroots.push_back(i);
                seen[leftmost[i]] = true;
            }
        }
        std::sort(keyroots.begin(), keyroots.end());
    }

    std::size_t visit(const TreeNode& n)
    {
        std::size_t first = 0;
        for (const auto& c : n.children) {
            std::size_t l = visit(c);
            if (first == 0) {
                first = l;
            }
        }
        label.push_back(n.label);
        std::size_t self = label.size() - 1;
        leftmost.push_back(first == 0 ? self : first);
        return leftmost.back();
    }

    [[nodiscard]] std::size_t size() const { return label.size() - 1; }
};

} // namespace

std::size_t tree_edit_distance(const LabeledTree& a, const LabeledTree& b)
{
    Postorder x(a);
    Postorder y(b);
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    if (n == 0 || m == 0) {
        return n + m;
    }
    std::vector<std::vector<std::size_t>> td(n + 1, std::vector<std::size_t>(m + 1, 0));
    std::vector<std::vector<std::size_t>> fd(n + 2, std::vector<std::size_t>(m + 2, 0));
    for (std::size_t i : x.keyroots) {
        for (std::size_t j : y.keyroots) {
            const std::size_t li = x.leftmost[i];
            const std::size_t lj = y.leftmost[j];
            // fd indices are shifted so that li-1 maps to 0
            fd[0][0] = 0;
            for (std::size_t di = li; di <= i; ++di) {
                fd[di - li + 1][0] = fd[di - li][0] + 1;
            }
            for (std::size_t dj = lj; dj <= j; ++dj) {
                fd[0][dj - lj + 1] = fd[0][dj - lj] + 1;
            }
            for (std::size_t di = li; di <= i; ++di) {
                for (std::size_t dj = lj; dj <= j; ++dj) {
                    const std::size_t r = di - li + 1;
                    const std::size_t c = dj - lj + 1;
                    const std::size_t del = fd[r - 1][c] + 1;
                    const std::size_t ins = fd[r][c - 1] + 1;
                    if (x.leftmost[di] == li && y.leftmost[dj] == lj) {
                        const std::size_t rel = fd[r - 1][c - 1] + (x.label[di] == y.label[dj] ? 0 : 1);
                        fd[r][c] = std::min({del, ins, rel});
                        td[di][dj] = fd[r][c];
                    } else {
                        const std::size_t pr = x.leftmost[di] - li;
                        const std::size_t pc = y.leftmost[dj] - lj;
                        fd[r][c] = std::min({del, ins, fd[pr][pc] + td[di][dj]});
                    }
                }
            }
        }
    }
    return td[n][m];
}

} // namespace codesift::testkit
