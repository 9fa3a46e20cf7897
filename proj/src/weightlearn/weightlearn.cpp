#include "codesift/weightlearn/weightlearn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace codesift::weightlearn {

std::vector<LabeledPair> build_training_pairs(const Groups& groups, const store::SearchIndex& index,
                                              const std::vector<std::uint32_t>& negative_pool, const PairOptions& opts)
{
    std::vector<std::vector<std::uint32_t>> members;
    for (const auto& [name, ids] : groups) {
        if (ids.size() < 2) {
            throw GroupTooSmall("group '" + name + "' needs at least two members");
        }
        auto& m = members.emplace_back();
        for (const auto& id : ids) {
            std::size_t pos = index.position(id);
            if (pos == index.size()) {
                throw MissingId(id);
            }
            m.push_back(static_cast<std::uint32_t>(pos));
        }
    }

    std::vector<LabeledPair> pairs;
    for (const auto& m : members) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                pairs.push_back({index.similarity_vector(index.vector(m[i]), index.vector(m[j])), 1});
            }
        }
    }

    // candidate negatives: (member of group g, member of another group or pool)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> candidates;
    for (std::size_t g = 0; g < members.size(); ++g) {
        for (auto a : members[g]) {
            for (std::size_t h = g + 1; h < members.size(); ++h) {
                for (auto b : members[h]) {
                    candidates.emplace_back(a, b);
                }
            }
            for (auto b : negative_pool) {
                candidates.emplace_back(a, b);
            }
        }
    }
    const std::size_t want = std::min(candidates.size(), pairs.size() * opts.negatives_per_positive);
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < want; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
        std::swap(candidates[i], candidates[pick(rng)]);
        auto [a, b] = candidates[i];
        pairs.push_back({index.similarity_vector(index.vector(a), index.vector(b)), 0});
    }
    return pairs;
}

RawWeights train_linear(const std::vector<LabeledPair>& pairs, const TrainConfig& cfg)
{
    bool pos = false;
    bool neg = false;
    for (const auto& p : pairs) {
        (p.label == 1 ? pos : neg) = true;
    }
    if (!pos || !neg) {
        throw DegenerateData("training pairs must contain both similar and dissimilar examples");
    }
    if (!(cfg.lambda > 0.0) || cfg.epochs == 0) {
        throw InvalidArgument("training needs a positive regularization strength and at least one epoch");
    }

    constexpr std::size_t d = kNumFeatureClasses + 1;   // last slot is the bias
    std::array<double, d> w{};
    std::array<double, d> avg{};
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(cfg.seed);
    std::size_t t = 0;
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i : order) {
            ++t;
            const auto& p = pairs[i];
            const double y = p.label == 1 ? 1.0 : -1.0;
            const double eta = 1.0 / (cfg.lambda * static_cast<double>(t));
            double margin = w[d - 1];
            for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
                margin += w[c] * p.sim[c];
            }
            margin *= y;
            const double shrink = 1.0 - eta * cfg.lambda;
            for (auto& x : w) {
                x *= shrink;
            }
            if (margin < 1.0) {
                for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
                    w[c] += eta * y * p.sim[c];
                }
                w[d - 1] += eta * y;
            }
            const double k = 1.0 / static_cast<double>(t);
            for (std::size_t c = 0; c < d; ++c) {
                avg[c] += (w[c] - avg[c]) * k;
            }
        }
    }
    RawWeights raw;
    std::copy(avg.begin(), avg.begin() + kNumFeatureClasses, raw.w.begin());
    raw.bias = avg[d - 1];
    return raw;
}

double training_accuracy(const RawWeights& raw, const std::vector<LabeledPair>& pairs)
{
    if (pairs.empty()) {
        return 0.0;
    }
    std::size_t correct = 0;
    for (const auto& p : pairs) {
        double f = raw.bias;
        for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
            f += raw.w[c] * p.sim[c];
        }
        if ((f > 0.0) == (p.label == 1)) {
            ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

WeightProfile finalize_weights(const RawWeights& raw)
{
    double total = 0.0;
    bool any = false;
    for (double x : raw.w) {
        total += std::abs(x);
        any = any || x > 0.0;
    }
    if (!any) {
        throw AllNonPositive("no feature-class received a positive coefficient");
    }
    WeightProfile p;
    for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
        p.w[c] = std::max(raw.w[c], 0.0) / total;
    }
    return p;
}

} // namespace codesift::weightlearn
