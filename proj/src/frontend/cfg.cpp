#include "codesift/frontend/cfg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>

namespace codesift::frontend {

namespace {

using Target = std::optional<std::size_t>;

struct CaseEntry
{
    std::size_t offset;
    Target entry;
    bool is_default;
};

// Builds statements back to front: each statement is built knowing the node
// that executes after it, so successor lists come out complete and ordered.
class CfgBuilder
{
  public:
    Cfg build(const AstNode& function_def)
    {
        Target entry;
        if (!function_def.children.empty()) {
            entry = build(function_def.children.back(), std::nullopt);
        }
        return finish(entry);
    }

  private:
    std::size_t make(std::string label, const AstNode& at)
    {
        nodes_.push_back({std::move(label), at.begin, at.line, false});
        succ_.emplace_back();
        return nodes_.size() - 1;
    }

    void link(std::size_t from, Target to)
    {
        if (!to) {
            return;
        }
        auto& out = succ_[from];
        if (std::find(out.begin(), out.end(), *to) == out.end()) {
            out.push_back(*to);
        }
    }

    Target build(const AstNode& s, Target next)
    {
        switch (s.kind) {
        case NodeKind::Seq:
            for (auto it = s.children.rbegin(); it != s.children.rend(); ++it) {
                next = build(*it, next);
            }
            return next;
        case NodeKind::Return:
            return make("return", s);
        case NodeKind::Break:
            return breaks_.empty() ? next : breaks_.back();
        case NodeKind::Continue:
            return continues_.empty() ? next : continues_.back();
        case NodeKind::IfCond: {
            std::size_t c = make("if-cond", s);
            Target then_entry = build(s.children[1], next);
            Target else_entry = s.children.size() > 2 ? build(s.children[2], next) : next;
            link(c, then_entry);
            link(c, else_entry);
            return c;
        }
        case NodeKind::WhileLoop: {
            std::size_t c = make("while-cond", s);
            breaks_.push_back(next);
            continues_.push_back(c);
            Target body = build(s.children[1], c);
            breaks_.pop_back();
            continues_.pop_back();
            link(c, body);
            link(c, next);
            return c;
        }
        case NodeKind::DoWhileLoop: {
            std::size_t c = make("do-cond", s.children[1]);
            breaks_.push_back(next);
            continues_.push_back(c);
            Target body = build(s.children[0], c);
            breaks_.pop_back();
            continues_.pop_back();
            link(c, body);
            link(c, next);
            return body;
        }
        case NodeKind::ForLoop: {
            const AstNode& init = s.children[0];
            const AstNode& cond = s.children[1];
            const AstNode& step = s.children[2];
            std::size_t c = make("for-cond", cond);
            Target cont = c;
            if (!(step.kind == NodeKind::Seq && step.children.empty())) {
                std::size_t st = make("for-step", step);
                link(st, c);
                cont = st;
            }
            breaks_.push_back(next);
            continues_.push_back(cont);
            Target body = build(s.children[3], cont);
            breaks_.pop_back();
            continues_.pop_back();
            link(c, body);
            if (!(cond.kind == NodeKind::Seq && cond.children.empty())) {
                link(c, next);
            }
            return build(init, c);
        }
        case NodeKind::SwitchCond: {
            std::size_t sw = make("switch-cond", s);
            breaks_.push_back(next);
            cases_.emplace_back();
            (void)build(s.children[1], next);
            std::vector<CaseEntry> entries = std::move(cases_.back());
            cases_.pop_back();
            breaks_.pop_back();
            std::sort(entries.begin(), entries.end(),
                      [](const CaseEntry& a, const CaseEntry& b) { return a.offset < b.offset; });
            bool has_default = false;
            for (const auto& e : entries) {
                link(sw, e.entry);
                has_default = has_default || e.is_default;
            }
            if (!has_default) {
                link(sw, next);
            }
            return sw;
        }
        case NodeKind::CaseLabel: {
            Target entry = build(s.children.back(), next);
            if (!cases_.empty()) {
                cases_.back().push_back({s.begin, entry, s.label == "default"});
            }
            return entry;
        }
        case NodeKind::Declaration: {
            std::size_t n = make("decl", s);
            link(n, next);
            return n;
        }
        default: {
            std::size_t n = make("expr", s);
            link(n, next);
            return n;
        }
        }
    }

    Cfg finish(Target entry)
    {
        const std::size_t n = nodes_.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return nodes_[a].offset < nodes_[b].offset; });
        std::vector<std::size_t> renumber(n);
        for (std::size_t i = 0; i < n; ++i) {
            renumber[order[i]] = i;
        }

        Cfg cfg;
        cfg.nodes.resize(n);
        cfg.successors.resize(n);
        for (std::size_t old = 0; old < n; ++old) {
            std::size_t id = renumber[old];
            cfg.nodes[id] = nodes_[old];
            for (std::size_t s : succ_[old]) {
                cfg.successors[id].push_back(renumber[s]);
            }
        }
        if (!entry) {
            return cfg;
        }
        cfg.entry = renumber[*entry];
        std::queue<std::size_t> work;
        work.push(cfg.entry);
        cfg.nodes[cfg.entry].reachable = true;
        while (!work.empty()) {
            std::size_t v = work.front();
            work.pop();
            for (std::size_t s : cfg.successors[v]) {
                if (!cfg.nodes[s].reachable) {
                    cfg.nodes[s].reachable = true;
                    work.push(s);
                }
            }
        }
        return cfg;
    }

    std::vector<CfgNode> nodes_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<Target> breaks_;
    std::vector<Target> continues_;
    std::vector<std::vector<CaseEntry>> cases_;
};

} // namespace

Cfg build_cfg(const AstNode& function_def)
{
    return CfgBuilder().build(function_def);
}

} // namespace codesift::frontend
