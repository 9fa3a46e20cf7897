#include "codesift/core/ground_truth.hpp"
#include "codesift/core/hash.hpp"
#include "codesift/core/observation.hpp"
#include "codesift/core/weights.hpp"

#include <gtest/gtest.h>

using namespace codesift;

TEST(FeatureClass, NamesRoundTrip)
{
    for (FeatureClass c : kAllFeatureClasses) {
        auto parsed = parse_feature_class(to_string(c));
        ASSERT_TRUE(parsed.has_value());
        EXPECT_EQ(*parsed, c);
    }
    EXPECT_FALSE(parse_feature_class("no-such-class").has_value());
}

TEST(FeatureVector, DefaultSlotsAreEmptyAndTyped)
{
    FeatureVector fv;
    for (FeatureClass c : kAllFeatureClasses) {
        EXPECT_EQ(kind_of(fv[c]), kind_of(c));
        EXPECT_TRUE(is_empty(fv[c]));
    }
}

TEST(FeatureVector, SetRejectsWrongKind)
{
    FeatureVector fv;
    EXPECT_THROW(fv.set(FeatureClass::SkeletonTree, TermSet{"x"}), KindMismatch);
    fv.set(FeatureClass::NumericLiterals, TermSet{"0", "1"});
    EXPECT_EQ(fv.get<TermSet>(FeatureClass::NumericLiterals).size(), 2u);
    EXPECT_THROW((void)fv.get<PairSet>(FeatureClass::NumericLiterals), KindMismatch);
}

TEST(LabeledTree, TraversalsAndBrackets)
{
    LabeledTree t;
    EXPECT_EQ(t.size(), 0u);
    EXPECT_EQ(to_bracket_string(t), "");
    t.root = TreeNode{"Seq", {TreeNode{"Loop", {TreeNode{"Cond", {}}}}, TreeNode{"Cond", {}}}};
    EXPECT_EQ(t.size(), 4u);
    EXPECT_EQ(to_bracket_string(t), "Seq(Loop(Cond), Cond)");
    EXPECT_EQ(preorder_labels(t), (std::vector<std::string>{"Seq", "Loop", "Cond", "Cond"}));
    EXPECT_EQ(postorder_labels(t), (std::vector<std::string>{"Cond", "Loop", "Cond", "Seq"}));
}

TEST(WeightProfile, JsonRoundTrip)
{
    WeightProfile w;
    w[FeatureClass::Comments] = 0.25;
    w[FeatureClass::Cfg4Bfs] = 0.75;
    EXPECT_EQ(weight_profile_from_json(to_json(w)), w);
}

TEST(WeightProfile, RejectsBadEntries)
{
    EXPECT_THROW((void)weight_profile_from_json({{"bogus", 1.0}}), FormatError);
    EXPECT_THROW((void)weight_profile_from_json({{"comments", -1.0}}), FormatError);
    EXPECT_THROW((void)weight_profile_from_json({{"comments", "x"}}), FormatError);
}

TEST(GroundTruth, ValidatesGroups)
{
    nlohmann::json ok = {{"domain", "d"}, {"groups", {{"g", {"a", "b"}}, {"h", {"c", "d", "e"}}}}};
    GroundTruth gt = ground_truth_from_json(ok);
    EXPECT_EQ(gt.domain, "d");
    EXPECT_EQ(gt.groups.at("h").size(), 3u);
    EXPECT_EQ(ground_truth_from_json(to_json(gt)), gt);

    EXPECT_THROW((void)ground_truth_from_json({{"groups", {{"g", {"a"}}}}}), FormatError);
    EXPECT_THROW((void)ground_truth_from_json({{"groups", {{"g", {"a", "b"}}, {"h", {"b", "c"}}}}}), FormatError);
    EXPECT_THROW((void)ground_truth_from_json(nlohmann::json::array()), FormatError);
}

TEST(Fnv1a, FieldsAreDelimited)
{
    Fnv1a a;
    Fnv1a b;
    a.field("ab").field("c");
    b.field("a").field("bc");
    EXPECT_NE(a.value(), b.value());
    EXPECT_EQ(a.hex().size(), 16u);
}
