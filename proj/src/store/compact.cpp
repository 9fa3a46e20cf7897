#include "codesift/store/compact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

namespace codesift::store {

namespace {

std::string pair_key(const std::pair<std::string, std::string>& p)
{
    std::string k = p.first;
    k += '\x1f';
    k += p.second;
    return k;
}

void tree_labels(const TreeNode& n, std::vector<std::string>& pre)
{
    pre.push_back(n.label);
    for (const auto& c : n.children) {
        tree_labels(c, pre);
    }
}

void tree_post(const TreeNode& n, std::vector<std::string>& post)
{
    for (const auto& c : n.children) {
        tree_post(c, post);
    }
    post.push_back(n.label);
}

using Span = std::span<const std::uint32_t>;

Span slot(const CompactVector& v, std::size_t c)
{
    return Span(v.data.data() + v.off[c], v.off[c + 1] - v.off[c]);
}

double set_sim(Span a, Span b)
{
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    std::size_t inter = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

double multiset_sim(Span a, Span b)
{
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    std::uint64_t total = 0;
    std::uint64_t mins = 0;
    for (std::size_t i = 1; i < a.size(); i += 2) {
        total += a[i];
    }
    for (std::size_t i = 1; i < b.size(); i += 2) {
        total += b[i];
    }
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            i += 2;
        } else if (b[j] < a[i]) {
            j += 2;
        } else {
            mins += std::min(a[i + 1], b[j + 1]);
            i += 2;
            j += 2;
        }
    }
    return static_cast<double>(mins) / static_cast<double>(total - mins);
}

std::size_t edit_distance(Span a, Span b)
{
    thread_local std::vector<std::size_t> row;
    row.resize(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

double tree_sim(Span a, Span b, const simkit::TreeDistanceConfig& cfg)
{
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    const std::size_t sa = a.size() / 2;
    const std::size_t sb = b.size() / 2;
    const double max_size = static_cast<double>(std::max(sa, sb));
    const double d_r = static_cast<double>(sa > sb ? sa - sb : sb - sa) / max_size;
    if (d_r >= cfg.d_t) {
        return 1.0 - d_r;
    }
    std::size_t pre = edit_distance(a.first(sa), b.first(sb));
    std::size_t post = edit_distance(a.last(sa), b.last(sb));
    return 1.0 - static_cast<double>(std::max(pre, post)) / max_size;
}

double terms_sim(const CompactVector& va, Span a, const CompactVector& vb, Span b)
{
    const double sa = va.norm2;
    const double sb = vb.norm2;
    if (sa == 0.0 && sb == 0.0) {
        return 1.0;
    }
    if (sa == 0.0 || sb == 0.0) {
        return 0.0;
    }
    const double* wa = va.weights.data();
    const double* wb = vb.weights.data();
    double dot = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            dot += wa[i] * wb[j];
            ++i;
            ++j;
        }
    }
    return std::clamp(dot / std::sqrt(sa * sb), 0.0, 1.0);
}

/// Interns `fv` with `lookup(cls, key)`; term slots are left in string order.
template <typename Lookup>
CompactVector intern_vector(const FeatureVector& fv, Lookup&& lookup)
{
    CompactVector v;
    for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
        v.off[c] = static_cast<std::uint32_t>(v.data.size());
        const auto& obs = fv.slots()[c];
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, TermSet>) {
                    std::vector<std::uint32_t> ids;
                    for (const auto& s : x) {
                        ids.push_back(lookup(c, s));
                    }
                    std::sort(ids.begin(), ids.end());
                    v.data.insert(v.data.end(), ids.begin(), ids.end());
                } else if constexpr (std::is_same_v<T, PairSet>) {
                    std::vector<std::uint32_t> ids;
                    for (const auto& p : x) {
                        ids.push_back(lookup(c, pair_key(p)));
                    }
                    std::sort(ids.begin(), ids.end());
                    v.data.insert(v.data.end(), ids.begin(), ids.end());
                } else if constexpr (std::is_same_v<T, ShapeMultiset> || std::is_same_v<T, TypeMultiset>) {
                    std::vector<std::pair<std::uint32_t, std::uint32_t>> items;
                    for (const auto& [k, n] : x) {
                        if constexpr (std::is_same_v<T, ShapeMultiset>) {
                            items.emplace_back(lookup(c, std::to_string(k)), n);
                        } else {
                            items.emplace_back(lookup(c, k), n);
                        }
                    }
                    std::sort(items.begin(), items.end());
                    for (const auto& [id, n] : items) {
                        v.data.push_back(id);
                        v.data.push_back(n);
                    }
                } else if constexpr (std::is_same_v<T, LabeledTree>) {
                    if (x.root) {
                        std::vector<std::string> pre;
                        std::vector<std::string> post;
                        tree_labels(*x.root, pre);
                        tree_post(*x.root, post);
                        for (const auto& l : pre) {
                            v.data.push_back(lookup(c, l));
                        }
                        for (const auto& l : post) {
                            v.data.push_back(lookup(c, l));
                        }
                    }
                } else {
                    double s = 0.0;
                    for (const auto& [term, w] : x) {
                        s += w * w;
                        std::uint32_t id = lookup(c, term);
                        if (id != UINT32_MAX) {
                            v.data.push_back(id);
                            v.weights.push_back(w);
                        }
                    }
                    v.norm2 = s;
                }
            },
            obs);
    }
    v.off[kNumFeatureClasses] = static_cast<std::uint32_t>(v.data.size());
    return v;
}

constexpr std::size_t kTermsSlot = index_of(FeatureClass::WeightedNlTerms);

} // namespace

SearchIndex::Builder::Builder() = default;

std::uint32_t SearchIndex::Builder::intern(std::size_t cls, const std::string& key)
{
    auto& d = dict_[cls];
    auto [it, inserted] = d.emplace(key, static_cast<std::uint32_t>(d.size()));
    return it->second;
}

void SearchIndex::Builder::add(std::string id, const FeatureVector& fv)
{
    ids_.push_back(std::move(id));
    vectors_.push_back(intern_vector(fv, [this](std::size_t c, const std::string& k) { return intern(c, k); }));
}

SearchIndex SearchIndex::Builder::finish() &&
{
    SearchIndex index;
    std::vector<std::size_t> order(ids_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ids_[a] < ids_[b]; });

    // renumber term ids so that id order equals term-string order
    auto& terms = dict_[kTermsSlot];
    std::vector<std::pair<const std::string*, std::uint32_t>> sorted;
    sorted.reserve(terms.size());
    for (auto& [k, id] : terms) {
        sorted.emplace_back(&k, id);
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return *a.first < *b.first; });
    std::vector<std::uint32_t> remap(sorted.size());
    for (std::size_t r = 0; r < sorted.size(); ++r) {
        remap[sorted[r].second] = static_cast<std::uint32_t>(r);
    }
    for (auto& [k, id] : terms) {
        id = remap[id];
    }

    index.ids_.reserve(ids_.size());
    index.vectors_.reserve(ids_.size());
    for (std::size_t i : order) {
        CompactVector& v = vectors_[i];
        for (std::uint32_t p = v.off[kTermsSlot]; p < v.off[kTermsSlot + 1]; ++p) {
            v.data[p] = remap[v.data[p]];
        }
        index.ids_.push_back(std::move(ids_[i]));
        index.vectors_.push_back(std::move(v));
    }
    index.dict_ = std::move(dict_);
    return index;
}

std::size_t SearchIndex::position(const std::string& id) const
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    return it != ids_.end() && *it == id ? static_cast<std::size_t>(it - ids_.begin()) : ids_.size();
}

CompactVector SearchIndex::compile(const FeatureVector& fv) const
{
    std::array<std::unordered_map<std::string, std::uint32_t>, kNumFeatureClasses> overlay;
    return intern_vector(fv, [&](std::size_t c, const std::string& k) -> std::uint32_t {
        if (auto it = dict_[c].find(k); it != dict_[c].end()) {
            return it->second;
        }
        if (c == kTermsSlot) {
            return UINT32_MAX;
        }
        auto& o = overlay[c];
        auto [it, inserted] = o.emplace(k, static_cast<std::uint32_t>(dict_[c].size() + o.size()));
        return it->second;
    });
}

double SearchIndex::class_similarity(const CompactVector& a, const CompactVector& b, FeatureClass c) const
{
    const std::size_t i = index_of(c);
    switch (kind_of(c)) {
    case ObservationKind::TermSet:
    case ObservationKind::PairSet:
        return set_sim(slot(a, i), slot(b, i));
    case ObservationKind::ShapeMultiset:
    case ObservationKind::TypeMultiset:
        return multiset_sim(slot(a, i), slot(b, i));
    case ObservationKind::LabeledTree:
        return tree_sim(slot(a, i), slot(b, i), tree_config);
    case ObservationKind::WeightedTermMap:
        return terms_sim(a, slot(a, i), b, slot(b, i));
    }
    return 0.0;
}

SimilarityVector SearchIndex::similarity_vector(const CompactVector& a, const CompactVector& b) const
{
    SimilarityVector sv{};
    for (std::size_t i = 0; i < kNumFeatureClasses; ++i) {
        sv[i] = class_similarity(a, b, class_at(i));
    }
    return sv;
}

double SearchIndex::combined(const CompactVector& a, const CompactVector& b, const WeightProfile& w) const
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < kNumFeatureClasses; ++i) {
        if (w.w[i] > 0.0) {
            num += class_similarity(a, b, class_at(i)) * w.w[i];
            den += w.w[i];
        }
    }
    return std::min(num / den, 1.0);
}

} // namespace codesift::store
