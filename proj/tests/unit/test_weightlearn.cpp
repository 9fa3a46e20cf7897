#include "codesift/store/database.hpp"
#include "codesift/weightlearn/weightlearn.hpp"

#include "random_fv.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace codesift;
using namespace codesift::weightlearn;

namespace {

std::vector<LabeledPair> planted(std::uint64_t seed, std::size_t n, FeatureClass informative)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.1);
    std::vector<LabeledPair> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        LabeledPair p;
        p.label = i % 2 == 0 ? 1 : 0;
        for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
            p.sim[c] = std::clamp(0.5 + noise(rng), 0.0, 1.0);
        }
        p.sim[index_of(informative)] = p.label == 1 ? 0.8 + 0.2 * std::abs(noise(rng)) : 0.2 - 0.2 * std::abs(noise(rng));
        pairs.push_back(p);
    }
    return pairs;
}

store::CodeDatabase random_db(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    store::CodeDatabase db;
    for (std::size_t i = 0; i < n; ++i) {
        store::FunctionRecord r;
        r.id = "f" + std::to_string(i);
        r.features = testkit::random_feature_vector(rng);
        db.insert(std::move(r));
    }
    return db;
}

} // namespace

TEST(Pairs, CountsAndLabels)
{
    auto db = random_db(20, 1);
    const auto& index = db.index();
    Groups groups{{"g1", {"f0", "f1", "f2"}}, {"g2", {"f3", "f4"}}};
    std::vector<std::uint32_t> pool{10, 11, 12};
    auto pairs = build_training_pairs(groups, index, pool, {2, 5});
    std::size_t pos = 0;
    std::size_t neg = 0;
    for (const auto& p : pairs) {
        (p.label == 1 ? pos : neg)++;
    }
    EXPECT_EQ(pos, 4u);   // 3 + 1 intra-group pairs
    EXPECT_EQ(neg, 8u);
    auto again = build_training_pairs(groups, index, pool, {2, 5});
    ASSERT_EQ(again.size(), pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_EQ(again[i].sim, pairs[i].sim);
    }
    EXPECT_THROW((void)build_training_pairs({{"g", {"f0"}}}, index, pool), GroupTooSmall);
    EXPECT_THROW((void)build_training_pairs({{"g", {"f0", "zz"}}}, index, pool), MissingId);
}

TEST(Train, SeparableDataAndPlantedClass)
{
    auto pairs = planted(3, 400, FeatureClass::Cfg4Bfs);
    RawWeights raw = train_linear(pairs, {1e-3, 100, 3});
    EXPECT_GE(training_accuracy(raw, pairs), 0.95);
    WeightProfile w = finalize_weights(raw);
    auto best = std::max_element(w.w.begin(), w.w.end()) - w.w.begin();
    EXPECT_EQ(static_cast<std::size_t>(best), index_of(FeatureClass::Cfg4Bfs));
}

TEST(Train, FlippedLabelsNegateTheSolution)
{
    auto pairs = planted(4, 100, FeatureClass::Comments);
    RawWeights a = train_linear(pairs, {1e-2, 20, 9});
    for (auto& p : pairs) {
        p.label = 1 - p.label;
    }
    RawWeights b = train_linear(pairs, {1e-2, 20, 9});
    for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
        EXPECT_DOUBLE_EQ(a.w[c], -b.w[c]);
    }
    EXPECT_DOUBLE_EQ(a.bias, -b.bias);
}

TEST(Train, RejectsDegenerateInput)
{
    std::vector<LabeledPair> only_pos(5);
    for (auto& p : only_pos) {
        p.label = 1;
    }
    EXPECT_THROW((void)train_linear(only_pos), DegenerateData);
    EXPECT_THROW((void)train_linear({}), DegenerateData);
    auto pairs = planted(1, 10, FeatureClass::Comments);
    EXPECT_THROW((void)train_linear(pairs, {0.0, 10, 0}), InvalidArgument);
}

TEST(Finalize, ClampsAndNormalizesByAbsoluteSum)
{
    RawWeights raw;
    raw.w[0] = 2.0;
    raw.w[1] = -1.0;
    raw.w[2] = 1.0;
    WeightProfile w = finalize_weights(raw);
    EXPECT_DOUBLE_EQ(w.w[0], 0.5);
    EXPECT_DOUBLE_EQ(w.w[1], 0.0);
    EXPECT_DOUBLE_EQ(w.w[2], 0.25);
    RawWeights neg;
    neg.w.fill(-1.0);
    EXPECT_THROW((void)finalize_weights(neg), AllNonPositive);
    EXPECT_THROW((void)finalize_weights(RawWeights{}), AllNonPositive);
}
