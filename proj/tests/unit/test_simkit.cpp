#include "codesift/simkit/similarity.hpp"

#include "random_fv.hpp"
#include "ted.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace codesift;
using namespace codesift::simkit;

namespace {

LabeledTree chain(std::initializer_list<const char*> labels)
{
    LabeledTree t;
    std::vector<std::string> ls(labels.begin(), labels.end());
    if (ls.empty()) {
        return t;
    }
    TreeNode node{ls.back(), {}};
    for (auto it = ls.rbegin() + 1; it != ls.rend(); ++it) {
        node = TreeNode{*it, {node}};
    }
    t.root = node;
    return t;
}

} // namespace

TEST(Jaccard, SetsAndEmptyConventions)
{
    EXPECT_DOUBLE_EQ(jaccard(TermSet{"a", "b", "c"}, TermSet{"b", "c", "d"}), 0.5);
    EXPECT_DOUBLE_EQ(jaccard(TermSet{}, TermSet{}), 1.0);
    EXPECT_DOUBLE_EQ(jaccard(TermSet{"a"}, TermSet{}), 0.0);
    EXPECT_DOUBLE_EQ(jaccard(PairSet{{"int", "+"}}, PairSet{{"int", "+"}, {"int", "-"}}), 0.5);
}

TEST(GeneralizedJaccard, Multisets)
{
    EXPECT_DOUBLE_EQ(generalized_jaccard(ShapeMultiset{{1, 2}, {2, 1}}, ShapeMultiset{{1, 1}, {3, 1}}), 1.0 / 4.0);
    EXPECT_DOUBLE_EQ(generalized_jaccard(TypeMultiset{{"int", 3}, {"int*", 1}}, TypeMultiset{{"int", 2}}), 0.5);
    EXPECT_DOUBLE_EQ(generalized_jaccard(ShapeMultiset{}, ShapeMultiset{}), 1.0);
    EXPECT_DOUBLE_EQ(generalized_jaccard(TypeMultiset{}, TypeMultiset{{"int", 1}}), 0.0);
}

TEST(Cosine, WeightedTerms)
{
    WeightedTermMap a{{"x", 1.0}, {"y", 1.0}};
    WeightedTermMap b{{"x", 1.0}};
    EXPECT_NEAR(cosine_weighted(a, b), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(cosine_weighted(a, a), 1.0);
    EXPECT_DOUBLE_EQ(cosine_weighted(a, WeightedTermMap{{"z", 2.0}}), 0.0);
    EXPECT_DOUBLE_EQ(cosine_weighted({}, {}), 1.0);
}

TEST(SequenceEditDistance, Basics)
{
    using V = std::vector<std::string>;
    EXPECT_EQ(sequence_edit_distance(V{"a", "b", "c"}, V{"a", "c"}), 1u);
    EXPECT_EQ(sequence_edit_distance(V{}, V{"a", "b"}), 2u);
    EXPECT_EQ(sequence_edit_distance(V{"a", "b"}, V{"b", "a"}), 2u);
}

TEST(TreeSimilarity, SizeRatioBranch)
{
    LabeledTree small = chain({"Seq"});
    LabeledTree big = chain({"Seq", "Loop", "Seq", "Cond"});
    // d_r = 1 - 1/4 = 0.75 >= 0.5
    EXPECT_DOUBLE_EQ(tree_similarity(small, big), 0.25);
}

TEST(TreeSimilarity, TraversalBranch)
{
    LabeledTree a = chain({"Seq", "Loop", "Seq", "Cond"});
    LabeledTree b = chain({"Seq", "Loop", "Seq", "Loop"});
    EXPECT_DOUBLE_EQ(tree_similarity(a, b), 0.75);
    EXPECT_DOUBLE_EQ(tree_similarity(a, a), 1.0);
    EXPECT_DOUBLE_EQ(tree_similarity({}, {}), 1.0);
    EXPECT_DOUBLE_EQ(tree_similarity(a, {}), 0.0);
}

TEST(TreeSimilarity, ThresholdIsInclusive)
{
    LabeledTree a = chain({"a", "b"});
    LabeledTree b = chain({"a", "b", "c", "d"});
    // d_r = 0.5 exactly: the size-ratio branch applies
    EXPECT_DOUBLE_EQ(tree_similarity(a, b), 0.5);
    TreeDistanceConfig loose{0.6};
    EXPECT_DOUBLE_EQ(tree_similarity(a, b, loose), 0.5);
    LabeledTree c = chain({"x", "y", "z", "w"});
    EXPECT_DOUBLE_EQ(tree_similarity(a, c, loose), 0.0);
}

TEST(Combined, WeightedAverage)
{
    SimilarityVector sv{};
    sv[index_of(FeatureClass::Comments)] = 1.0;
    sv[index_of(FeatureClass::LocalTypes)] = 0.5;
    WeightProfile w;
    w[FeatureClass::Comments] = 1.0;
    w[FeatureClass::LocalTypes] = 3.0;
    EXPECT_DOUBLE_EQ(combined_similarity(sv, w), (1.0 + 1.5) / 4.0);
    EXPECT_THROW((void)combined_similarity(sv, WeightProfile{}), ZeroWeightSum);
}

TEST(Observation, KindMismatchThrows)
{
    EXPECT_THROW((void)observation_similarity(TermSet{}, PairSet{}), KindMismatch);
}

TEST(SimilarityVector, RandomPropertiesSmoke)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        FeatureVector a = testkit::random_feature_vector(rng);
        FeatureVector b = testkit::random_feature_vector(rng);
        SimilarityVector ab = similarity_vector(a, b);
        SimilarityVector ba = similarity_vector(b, a);
        SimilarityVector aa = similarity_vector(a, a);
        for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
            EXPECT_EQ(ab[c], ba[c]);
            EXPECT_GE(ab[c], 0.0);
            EXPECT_LE(ab[c], 1.0);
            EXPECT_EQ(aa[c], 1.0);
        }
    }
}

TEST(TedOracle, KnownDistances)
{
    LabeledTree a = chain({"a", "b", "c"});
    EXPECT_EQ(testkit::tree_edit_distance(a, a), 0u);
    EXPECT_EQ(testkit::tree_edit_distance(a, chain({"a", "c"})), 1u);
    EXPECT_EQ(testkit::tree_edit_distance(a, {}), 3u);
    LabeledTree f;
    f.root = TreeNode{"f", {TreeNode{"d", {TreeNode{"a", {}}, TreeNode{"c", {TreeNode{"b", {}}}}}}, TreeNode{"e", {}}}};
    LabeledTree g;
    g.root = TreeNode{"f", {TreeNode{"c", {TreeNode{"d", {TreeNode{"a", {}}, TreeNode{"b", {}}}}}}, TreeNode{"e", {}}}};
    EXPECT_EQ(testkit::tree_edit_distance(f, g), 2u);
}
