#include "codesift/simkit/similarity.hpp"

#include "codesift/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace codesift::simkit {

namespace {

template <typename Set>
double set_jaccard(const Set& a, const Set& b)
{
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    std::size_t inter = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

template <typename Multiset>
double multiset_jaccard(const Multiset& a, const Multiset& b)
{
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    std::uint64_t total = 0;
    std::uint64_t mins = 0;
    for (const auto& [k, v] : a) {
        total += v;
    }
    for (const auto& [k, v] : b) {
        total += v;
        if (auto it = a.find(k); it != a.end()) {
            mins += std::min(it->second, v);
        }
    }
    return static_cast<double>(mins) / static_cast<double>(total - mins);
}

} // namespace

double jaccard(const TermSet& a, const TermSet& b)
{
    return set_jaccard(a, b);
}

double jaccard(const PairSet& a, const PairSet& b)
{
    return set_jaccard(a, b);
}

double generalized_jaccard(const ShapeMultiset& a, const ShapeMultiset& b)
{
    return multiset_jaccard(a, b);
}

double generalized_jaccard(const TypeMultiset& a, const TypeMultiset& b)
{
    return multiset_jaccard(a, b);
}

double cosine_weighted(const WeightedTermMap& a, const WeightedTermMap& b)
{
    double sa = 0.0;
    double sb = 0.0;
    for (const auto& [k, v] : a) {
        sa += v * v;
    }
    for (const auto& [k, v] : b) {
        sb += v * v;
    }
    if (sa == 0.0 && sb == 0.0) {
        return 1.0;
    }
    if (sa == 0.0 || sb == 0.0) {
        return 0.0;
    }
    double dot = 0.0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            dot += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return std::clamp(dot / std::sqrt(sa * sb), 0.0, 1.0);
}

std::size_t sequence_edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = j;
    }
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

double tree_similarity(const LabeledTree& a, const LabeledTree& b, const TreeDistanceConfig& cfg)
{
    if (a.empty() && b.empty()) {
        return 1.0;
    }
    if (a.empty() || b.empty()) {
        return 0.0;
    }
    const std::size_t sa = a.size();
    const std::size_t sb = b.size();
    const double max_size = static_cast<double>(std::max(sa, sb));
    const double d_r = static_cast<double>(sa > sb ? sa - sb : sb - sa) / max_size;
    if (d_r >= cfg.d_t) {
        return 1.0 - d_r;
    }
    std::size_t pre = sequence_edit_distance(preorder_labels(a), preorder_labels(b));
    std::size_t post = sequence_edit_distance(postorder_labels(a), postorder_labels(b));
    return 1.0 - static_cast<double>(std::max(pre, post)) / max_size;
}

double observation_similarity(const FeatureObservation& a, const FeatureObservation& b, const TreeDistanceConfig& cfg)
{
    if (a.index() != b.index()) {
        throw KindMismatch("cannot compare observations of different kinds");
    }
    return std::visit(
        [&](const auto& x) -> double {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, TermSet> || std::is_same_v<T, PairSet>) {
                return jaccard(x, y);
            } else if constexpr (std::is_same_v<T, ShapeMultiset> || std::is_same_v<T, TypeMultiset>) {
                return generalized_jaccard(x, y);
            } else if constexpr (std::is_same_v<T, LabeledTree>) {
                return tree_similarity(x, y, cfg);
            } else {
                return cosine_weighted(x, y);
            }
        },
        a);
}

SimilarityVector similarity_vector(const FeatureVector& a, const FeatureVector& b, const TreeDistanceConfig& cfg)
{
    SimilarityVector sv{};
    for (std::size_t i = 0; i < kNumFeatureClasses; ++i) {
        sv[i] = observation_similarity(a.slots()[i], b.slots()[i], cfg);
    }
    return sv;
}

double combined_similarity(const SimilarityVector& sv, const WeightProfile& w)
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < kNumFeatureClasses; ++i) {
        if (w.w[i] > 0.0) {
            num += sv[i] * w.w[i];
            den += w.w[i];
        }
    }
    if (!(den > 0.0)) {
        throw ZeroWeightSum();
    }
    return std::min(num / den, 1.0);
}

} // namespace codesift::simkit
