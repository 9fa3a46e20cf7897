#include "codesift/eval/benchmark.hpp"
#include "codesift/eval/metrics.hpp"
#include "codesift/eval/synthetic.hpp"
#include "codesift/frontend/parser.hpp"
#include "codesift/store/indexer.hpp"

#include "random_fv.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace codesift;
using namespace codesift::eval;

namespace {

const std::string kSource = CODESIFT_SOURCE_DIR;

// Groups whose members share a distinctive comment vocabulary, plus random distractors.
store::CodeDatabase planted_db(std::size_t groups, std::size_t per_group, std::size_t distractors, GroundTruth& gt)
{
    std::mt19937_64 rng(99);
    store::CodeDatabase db;
    gt.domain = "planted";
    for (std::size_t g = 0; g < groups; ++g) {
        auto& members = gt.groups["g" + std::to_string(g)];
        for (std::size_t m = 0; m < per_group; ++m) {
            store::FunctionRecord r;
            r.id = "g" + std::to_string(g) + "_" + std::to_string(m);
            r.features = testkit::random_feature_vector(rng);
            r.features.set(FeatureClass::Comments, TermSet{"topic" + std::to_string(g), "shared" + std::to_string(g)});
            members.push_back(r.id);
            db.insert(std::move(r));
        }
    }
    for (std::size_t d = 0; d < distractors; ++d) {
        store::FunctionRecord r;
        r.id = "z" + std::to_string(1000 + d);
        r.features = testkit::random_feature_vector(rng);
        r.distractor = true;
        db.insert(std::move(r));
    }
    return db;
}

} // namespace

TEST(AveragePrecision, DocumentedExamples)
{
    EXPECT_DOUBLE_EQ(average_precision({"a", "b", "x"}, {"a", "b"}), 1.0);
    EXPECT_NEAR(average_precision({"a", "x", "b"}, {"a", "b"}), 5.0 / 6.0, 1e-12);
    EXPECT_NEAR(average_precision_from_ranks({2, 5, 9}, 3), (0.5 + 0.4 + 1.0 / 3.0) / 3.0, 1e-12);
    EXPECT_THROW((void)average_precision({"a"}, {}), EmptyRelevantSet);
}

TEST(AveragePrecision, MissingRelevantItemsCountAsZero)
{
    EXPECT_DOUBLE_EQ(average_precision({"a", "x"}, {"a", "b"}), 0.5);
    EXPECT_DOUBLE_EQ(average_precision_from_ranks({3, 1}, 2), (1.0 + 2.0 / 3.0) / 2.0);
}

TEST(MeanAveragePrecision, Basics)
{
    EXPECT_DOUBLE_EQ(mean_average_precision({1.0, 1.0, 1.0}), 1.0);
    EXPECT_DOUBLE_EQ(mean_average_precision({0.5, 1.0}), 0.75);
}

TEST(ConfigNames, RoundTrip)
{
    for (const char* n : {"equal-all", "dyn-select", "rand-select", "svm-weights", "svm-weights-cross",
                          "solo-comments", "solo-4-graph-cfg-bfs"}) {
        EXPECT_EQ(config_name(parse_config_name(n)), n);
    }
    EXPECT_THROW((void)parse_config_name("solo-nothing"), InvalidArgument);
    EXPECT_THROW((void)parse_config_name("best"), InvalidArgument);
}

TEST(KFold, PartitionsGroups)
{
    GroundTruth gt;
    for (int i = 0; i < 7; ++i) {
        gt.groups["g" + std::to_string(i)] = {"a" + std::to_string(i), "b" + std::to_string(i)};
    }
    auto folds = kfold_split(gt, 3, 1);
    ASSERT_EQ(folds.size(), 3u);
    std::multiset<std::string> tested;
    for (const auto& [train, test] : folds) {
        EXPECT_EQ(train.size() + test.size(), 7u);
        EXPECT_FALSE(test.empty());
        tested.insert(test.begin(), test.end());
        for (const auto& t : test) {
            EXPECT_EQ(std::count(train.begin(), train.end(), t), 0);
        }
    }
    EXPECT_EQ(tested.size(), 7u);
    EXPECT_EQ(std::set<std::string>(tested.begin(), tested.end()).size(), 7u);
    EXPECT_THROW((void)kfold_split(gt, 8, 1), TooManyFolds);
    EXPECT_THROW((void)kfold_split(gt, 1, 1), TooManyFolds);
}

TEST(DistractorPool, PrefersFlaggedRecords)
{
    GroundTruth gt;
    auto db = planted_db(2, 2, 5, gt);
    store::FunctionRecord stray;
    stray.id = "stray";
    db.insert(stray);
    auto pool = distractor_pool(gt, db);
    EXPECT_EQ(pool.size(), 5u);
    for (auto p : pool) {
        EXPECT_TRUE(db.get(db.index().id(p)).distractor);
    }
}

TEST(Benchmark, PerfectRetrievalGivesMapOne)
{
    GroundTruth gt;
    auto db = planted_db(3, 3, 30, gt);
    EvalConfig cfg = parse_config_name("solo-comments");
    ConfigReport r = run_benchmark(gt, db, cfg);
    EXPECT_EQ(r.map, 1.0);
    EXPECT_EQ(r.queries.size(), 9u);
    EXPECT_EQ(r.distractors, 30u);
}

TEST(Benchmark, AllConfigurationsRun)
{
    GroundTruth gt;
    auto db = planted_db(4, 3, 60, gt);
    for (const char* n : {"equal-all", "dyn-select", "rand-select", "svm-weights"}) {
        EvalConfig cfg = parse_config_name(n);
        cfg.distractor_count = 40;
        cfg.seed = 5;
        ConfigReport r = run_benchmark(gt, db, cfg);
        EXPECT_EQ(r.name, n);
        EXPECT_EQ(r.distractors, 40u);
        EXPECT_GE(r.map, 0.0);
        EXPECT_LE(r.map, 1.0);
        ConfigReport again = run_benchmark(gt, db, cfg);
        EXPECT_EQ(again.map, r.map) << n;
    }
    EvalConfig too_many;
    too_many.distractor_count = 61;
    EXPECT_THROW((void)run_benchmark(gt, db, too_many), InsufficientDistractors);
    EvalConfig bad_folds = parse_config_name("svm-weights");
    bad_folds.folds = 9;
    EXPECT_THROW((void)run_benchmark(gt, db, bad_folds), TooManyFolds);
    GroundTruth missing = gt;
    missing.groups["extra"] = {"nobody", "nothing"};
    EXPECT_THROW((void)run_benchmark(missing, db, EvalConfig{}), MissingId);
}

TEST(Benchmark, CrossDomainProfile)
{
    GroundTruth gt;
    auto db = planted_db(3, 3, 20, gt);
    std::filesystem::path path = std::filesystem::temp_directory_path() / "codesift_cross_profile.json";
    save_weight_profile(WeightProfile::solo(FeatureClass::Comments), path);
    EvalConfig cfg = parse_config_name("svm-weights-cross");
    cfg.profile = path;
    EXPECT_EQ(run_benchmark(gt, db, cfg).map, 1.0);
    std::filesystem::remove(path);
}

TEST(Reports, JsonTextAndSweep)
{
    GroundTruth gt;
    auto db = planted_db(2, 3, 20, gt);
    EvalReport report{"planted", {run_benchmark(gt, db, EvalConfig{})}};
    auto j = to_json(report);
    EXPECT_EQ(j.at("schema"), "codesift-eval-1");
    EXPECT_EQ(j.at("configurations").size(), 1u);
    EXPECT_NE(to_text(report).find("equal-all"), std::string::npos);

    auto rows = distractor_sweep(gt, db, {EvalConfig{}, parse_config_name("solo-comments")}, {5, 20});
    ASSERT_EQ(rows.size(), 4u);
    std::string csv = sweep_csv(rows);
    EXPECT_TRUE(csv.starts_with("distractors,configuration,map\n"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Synthetic, DeterministicParseableDistractors)
{
    auto a = synthetic_units(40, 7);
    auto b = synthetic_units(40, 7);
    ASSERT_EQ(a.size(), b.size());
    std::size_t functions = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].unit.text, b[i].unit.text);
        EXPECT_TRUE(a[i].distractor);
        functions += frontend::parse_unit(a[i].unit).size();
    }
    EXPECT_EQ(functions, 40u);
    EXPECT_NE(synthetic_units(40, 8).front().unit.text, a.front().unit.text);
}

TEST(Synthetic, BenchmarkDatabase)
{
    auto res = store::ExtractionResources::load(kSource + "/data");
    auto db = build_benchmark_database(kSource + "/benchmarks/algo/manifest.json", res, 50, 1);
    EXPECT_EQ(db.size(), 71u);
    GroundTruth gt = load_ground_truth(kSource + "/benchmarks/algo/ground_truth.json");
    EXPECT_EQ(gt.groups.size(), 7u);
    for (const auto& [name, ids] : gt.groups) {
        for (const auto& id : ids) {
            EXPECT_TRUE(db.contains(id)) << id;
        }
    }
    EXPECT_EQ(distractor_pool(gt, db).size(), 50u);
    EXPECT_FALSE(db.meta.corpus_root.empty());
}
