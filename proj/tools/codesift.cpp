// codesift: index C functions and search them by similarity.

#include "codesift/core/errors.hpp"
#include "codesift/core/ground_truth.hpp"
#include "codesift/dynselect/dynselect.hpp"
#include "codesift/eval/benchmark.hpp"
#include "codesift/features/extract.hpp"
#include "codesift/store/indexer.hpp"
#include "codesift/store/search.hpp"
#include "codesift/store/serialize.hpp"
#include "codesift/weightlearn/weightlearn.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace codesift;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Common
{
    std::string data_dir;
    std::string db;
    std::string format = "text";
    std::uint64_t seed = 0;
};

fs::path data_dir(const Common& c)
{
    return c.data_dir.empty() ? features::default_data_dir() : fs::path(c.data_dir);
}

std::string db_path(const Common& c)
{
    if (!c.db.empty()) {
        return c.db;
    }
    if (const char* env = std::getenv("CODESIFT_DB"); env != nullptr && *env != '\0') {
        return env;
    }
    throw InvalidArgument("no database given: pass --db or set CODESIFT_DB");
}

store::CodeDatabase open_db(const Common& c)
{
    return store::load_database(db_path(c), features::kExtractorVersion);
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << text;
}

json breakdown_json(const SimilarityVector& sv)
{
    json j = json::object();
    for (FeatureClass c : kAllFeatureClasses) {
        j[std::string(to_string(c))] = sv[index_of(c)];
    }
    return j;
}

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// ---- index -----------------------------------------------------------------

struct IndexArgs
{
    std::string manifest;
    std::string out;
    bool skip_errors = false;
    bool no_source = false;
    std::size_t synthetic = 0;
};

int run_index(const Common& c, const IndexArgs& a)
{
    auto res = store::ExtractionResources::load(data_dir(c));
    store::IndexOptions opts;
    opts.keep_source = !a.no_source;
    opts.skip_unparseable = a.skip_errors;
    opts.on_skip = [](const ParseError& e) { std::cerr << "warning: skipped " << e.what() << "\n"; };
    store::CodeDatabase db = eval::build_benchmark_database(a.manifest, res, a.synthetic, c.seed, opts);
    std::string out = a.out.empty() ? db_path(c) : a.out;
    store::save_database(db, out);
    std::cerr << "indexed " << db.size() << " functions into " << out << "\n";
    return 0;
}

// ---- query -----------------------------------------------------------------

struct QueryArgs
{
    std::string file;
    std::size_t k = 10;
    std::string weights = "equal";
    double t_uniq = 0.15;
    std::size_t n_samp = 200;
    std::string thresholds;
    std::size_t threads = 1;
    bool no_breakdown = false;
};

int run_query(const Common& c, const QueryArgs& a)
{
    if (a.k == 0) {
        throw InvalidArgument("--k must be positive");
    }
    const std::string path = db_path(c);
    store::CodeDatabase db = open_db(c);
    auto res = store::ExtractionResources::load(data_dir(c));
    frontend::FunctionIR ir = store::parse_query(a.file, db);
    FeatureVector qv = store::query_vector(ir, db, res);
    const auto& index = db.index();
    store::CompactVector q = index.compile(qv);

    WeightProfile w;
    std::string source = a.weights;
    if (a.weights == "equal" || a.weights == "equal-all") {
        w = WeightProfile::equal_all();
    } else if (a.weights == "dyn-select") {
        if (db.size() < 2) {
            w = WeightProfile::equal_all();
            w.fallback = true;
        } else {
            std::optional<fs::path> side = a.thresholds.empty() ? dynselect::default_sidecar_path(path)
                                                                : fs::path(a.thresholds);
            auto s = dynselect::sidecar_for(db, std::min(a.n_samp, db.size()), c.seed, side);
            w = dynselect::select_classes(index, q, dynselect::pool_from_sidecar(index, s), s.thresholds,
                                          {a.t_uniq, a.n_samp});
        }
    } else if (a.weights.starts_with("solo-")) {
        auto cls = parse_feature_class(std::string_view(a.weights).substr(5));
        if (!cls) {
            throw InvalidArgument("unknown feature-class in --weights " + a.weights);
        }
        w = WeightProfile::solo(*cls);
    } else {
        w = load_weight_profile(a.weights);
    }

    store::SearchOptions opts;
    opts.threads = a.threads;
    store::RankedList list = store::top_k(index, q, w, a.k, opts);

    if (c.format == "json") {
        json results = json::array();
        for (std::size_t i = 0; i < list.entries.size(); ++i) {
            const auto& e = list.entries[i];
            json r = {{"rank", i + 1}, {"id", e.id}, {"score", e.score}};
            if (!a.no_breakdown) {
                r["breakdown"] = breakdown_json(e.breakdown);
            }
            results.push_back(std::move(r));
        }
        json out = {{"schema", "codesift-query-1"},
                    {"query", ir.id},
                    {"k", a.k},
                    {"weights", to_json(w)},
                    {"weights_source", source},
                    {"fallback", w.fallback},
                    {"results", std::move(results)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "query " << ir.id << "  weights " << source << (w.fallback ? " (fell back to equal-all)" : "")
              << "\n";
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
        const auto& e = list.entries[i];
        std::cout << (i + 1) << "\t" << fmt("%.6f", e.score) << "\t" << e.id << "\n";
        if (!a.no_breakdown) {
            for (FeatureClass cls : kAllFeatureClasses) {
                if (w[cls] > 0.0) {
                    std::cout << "\t  " << to_string(cls) << " " << fmt("%.4f", e.breakdown[index_of(cls)]) << "\n";
                }
            }
        }
    }
    return 0;
}

// ---- thresholds ------------------------------------------------------------

struct ThresholdArgs
{
    std::size_t n_samp = 200;
    std::string out;
};

int run_thresholds(const Common& c, const ThresholdArgs& a)
{
    const std::string path = db_path(c);
    store::CodeDatabase db = open_db(c);
    auto s = dynselect::compute_sidecar(db, a.n_samp, c.seed);
    fs::path out = a.out.empty() ? dynselect::default_sidecar_path(path) : fs::path(a.out);
    dynselect::save_sidecar(s, out);
    if (c.format == "json") {
        json th = json::object();
        for (FeatureClass cls : kAllFeatureClasses) {
            th[std::string(to_string(cls))] = s.thresholds.threshold[index_of(cls)];
        }
        std::cout << json{{"sidecar", out.string()}, {"thresholds", th}}.dump(2) << "\n";
    } else {
        for (FeatureClass cls : kAllFeatureClasses) {
            std::cout << to_string(cls) << "\t" << fmt("%.6f", s.thresholds.threshold[index_of(cls)]) << "\n";
        }
        std::cerr << "wrote " << out.string() << "\n";
    }
    return 0;
}

// ---- train-weights ---------------------------------------------------------

struct TrainArgs
{
    std::string ground_truth;
    std::string out;
    std::size_t negatives = 3;
    double lambda = 1e-3;
    std::size_t epochs = 100;
};

int run_train(const Common& c, const TrainArgs& a)
{
    store::CodeDatabase db = open_db(c);
    GroundTruth gt = load_ground_truth(a.ground_truth);
    const auto& index = db.index();
    auto pool = eval::distractor_pool(gt, db);
    auto pairs = weightlearn::build_training_pairs(gt.groups, index, pool, {a.negatives, c.seed});
    auto raw = weightlearn::train_linear(pairs, {a.lambda, a.epochs, c.seed});
    WeightProfile w = weightlearn::finalize_weights(raw);
    std::cerr << "trained on " << pairs.size() << " pairs, training accuracy "
              << fmt("%.4f", weightlearn::training_accuracy(raw, pairs)) << "\n";
    std::string text = to_json(w).dump(2) + "\n";
    write_output(text, a.out);
    return 0;
}

// ---- evaluate --------------------------------------------------------------

struct EvalArgs
{
    std::string config;
    std::string ground_truth;
    std::string manifest;
    std::vector<std::string> configs{"equal-all", "dyn-select", "rand-select", "svm-weights"};
    std::size_t distractors = 0;
    std::size_t synthetic = 0;
    std::size_t folds = 0;
    std::string profile;
    std::string out;
};

int run_evaluate(const Common& c, EvalArgs a)
{
    std::vector<std::size_t> counts;
    std::string csv_path;
    fs::path base = ".";
    std::string db_file = c.db;
    std::uint64_t seed = c.seed;
    if (!a.config.empty()) {
        std::ifstream in(a.config);
        if (!in) {
            throw IoError("cannot read " + a.config);
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw FormatError(a.config + ": " + e.what());
        }
        base = fs::path(a.config).parent_path();
        auto rel = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (base / p).string(); };
        try {
            if (j.contains("ground_truth")) a.ground_truth = rel(j.at("ground_truth").get<std::string>());
            if (j.contains("manifest")) a.manifest = rel(j.at("manifest").get<std::string>());
            if (j.contains("db")) db_file = rel(j.at("db").get<std::string>());
            if (j.contains("configurations")) a.configs = j.at("configurations").get<std::vector<std::string>>();
            if (j.contains("synthetic_distractors")) a.synthetic = j.at("synthetic_distractors").get<std::size_t>();
            if (j.contains("distractors")) a.distractors = j.at("distractors").get<std::size_t>();
            if (j.contains("distractor_counts")) counts = j.at("distractor_counts").get<std::vector<std::size_t>>();
            if (j.contains("folds")) a.folds = j.at("folds").get<std::size_t>();
            if (j.contains("profile")) a.profile = rel(j.at("profile").get<std::string>());
            if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
            if (j.contains("csv")) csv_path = rel(j.at("csv").get<std::string>());
        } catch (const json::exception& e) {
            throw FormatError(a.config + ": " + e.what());
        }
    }
    if (a.ground_truth.empty()) {
        throw InvalidArgument("evaluate needs a ground-truth file");
    }
    GroundTruth gt = load_ground_truth(a.ground_truth);
    store::CodeDatabase db;
    if (!a.manifest.empty()) {
        auto res = store::ExtractionResources::load(data_dir(c));
        db = eval::build_benchmark_database(a.manifest, res, a.synthetic, seed);
    } else {
        Common cc = c;
        cc.db = db_file;
        db = open_db(cc);
    }

    std::vector<eval::EvalConfig> configs;
    for (const auto& name : a.configs) {
        eval::EvalConfig cfg = eval::parse_config_name(name);
        cfg.seed = seed;
        cfg.pairs.seed = seed;
        cfg.train.seed = seed;
        cfg.folds = a.folds;
        cfg.distractor_count = a.distractors;
        if (cfg.kind == eval::ConfigKind::SvmWeightsCross) {
            if (a.profile.empty()) {
                throw InvalidArgument("svm-weights-cross needs a weight profile (--profile)");
            }
            cfg.profile = a.profile;
        }
        configs.push_back(cfg);
    }

    if (!counts.empty()) {
        auto rows = eval::distractor_sweep(gt, db, configs, counts);
        std::string csv = eval::sweep_csv(rows);
        write_output(csv, csv_path.empty() ? a.out : csv_path);
        if (!csv_path.empty()) {
            std::cout << csv;
        }
        return 0;
    }

    eval::EvalReport report;
    report.domain = gt.domain;
    for (const auto& cfg : configs) {
        report.configs.push_back(eval::run_benchmark(gt, db, cfg));
    }
    std::string text = c.format == "json" ? eval::to_json(report).dump(2) + "\n" : eval::to_text(report);
    write_output(text, a.out);
    return 0;
}

// ---- inspect ---------------------------------------------------------------

struct InspectArgs
{
    std::string id;
    bool list = false;
};

int run_inspect(const Common& c, const InspectArgs& a)
{
    store::CodeDatabase db = open_db(c);
    if (a.list || a.id.empty()) {
        for (const auto& [id, rec] : db.records()) {
            std::cout << id << (rec.distractor ? "\tdistractor" : "") << "\n";
        }
        return 0;
    }
    const auto& rec = db.get(a.id);
    if (c.format == "json") {
        std::cout << store::record_to_json(rec).dump(2) << "\n";
        return 0;
    }
    std::cout << rec.id << "  (project " << rec.project_id << (rec.distractor ? ", distractor" : "") << ")\n";
    for (FeatureClass cls : kAllFeatureClasses) {
        const auto& obs = rec.features[cls];
        std::string shown;
        if (const auto* t = std::get_if<LabeledTree>(&obs)) {
            shown = t->empty() ? "(empty)" : to_bracket_string(*t);
        } else {
            shown = store::observation_to_json(obs).dump();
        }
        std::cout << "  " << to_string(cls) << ": " << shown << "\n";
    }
    if (!rec.source_text.empty()) {
        std::cout << "\n" << rec.source_text << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"codesift: similarity search over C functions"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--data-dir", common.data_dir, "Word lists and library models (default: $CODESIFT_DATA_DIR or built-in)");
        sub->add_option("--db", common.db, "Database file (default: $CODESIFT_DB)");
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", common.seed, "Random seed");
    };

    IndexArgs ia;
    auto* index = app.add_subcommand("index", "Build a database from a corpus manifest");
    add_common(index);
    index->add_option("--manifest", ia.manifest, "Corpus manifest (JSON)")->required();
    index->add_option("-o,--out", ia.out, "Output database (default: --db)");
    index->add_flag("--skip-errors", ia.skip_errors, "Skip files outside the C subset instead of failing");
    index->add_flag("--no-source", ia.no_source, "Do not store function source text");
    index->add_option("--synthetic-distractors", ia.synthetic, "Add generated distractor functions");

    QueryArgs qa;
    auto* query = app.add_subcommand("query", "Find the functions most similar to a query function");
    add_common(query);
    query->add_option("file", qa.file, "File holding exactly one function")->required();
    query->add_option("-k,--k", qa.k, "Number of results");
    query->add_option("--weights", qa.weights, "equal, dyn-select, solo-<class> or a weight-profile file");
    query->add_option("--t-uniq", qa.t_uniq, "dyn-select distinctiveness threshold")->check(CLI::Range(0.0, 1.0));
    query->add_option("--n-samp", qa.n_samp, "dyn-select sample size")->check(CLI::PositiveNumber);
    query->add_option("--thresholds", qa.thresholds, "Threshold sidecar (default: <db>.thresholds.json)");
    query->add_option("--threads", qa.threads, "Scan threads (0: all cores)");
    query->add_flag("--no-breakdown", qa.no_breakdown, "Omit per-class scores");

    ThresholdArgs ta;
    auto* thresholds = app.add_subcommand("thresholds", "Precompute dyn-select thresholds");
    add_common(thresholds);
    thresholds->add_option("--n-samp", ta.n_samp, "Sample size")->check(CLI::PositiveNumber);
    thresholds->add_option("-o,--out", ta.out, "Sidecar path (default: <db>.thresholds.json)");

    TrainArgs tra;
    auto* train = app.add_subcommand("train-weights", "Learn feature-class weights from ground truth");
    add_common(train);
    train->add_option("--ground-truth", tra.ground_truth, "Ground-truth groups (JSON)")->required();
    train->add_option("-o,--out", tra.out, "Weight profile output (default: stdout)");
    train->add_option("--negatives", tra.negatives, "Dissimilar pairs per similar pair");
    train->add_option("--lambda", tra.lambda, "L2 regularization strength")->check(CLI::PositiveNumber);
    train->add_option("--epochs", tra.epochs, "Training epochs")->check(CLI::PositiveNumber);

    EvalArgs ea;
    auto* evaluate = app.add_subcommand("evaluate", "Run the retrieval benchmark");
    add_common(evaluate);
    evaluate->add_option("--config", ea.config, "Benchmark configuration (JSON)");
    evaluate->add_option("--ground-truth", ea.ground_truth, "Ground-truth groups (JSON)");
    evaluate->add_option("--manifest", ea.manifest, "Index this manifest instead of loading --db");
    evaluate->add_option("--configurations", ea.configs, "Configurations to run")->delimiter(',');
    evaluate->add_option("--distractors", ea.distractors, "Distractors per query (0: whole pool)");
    evaluate->add_option("--synthetic-distractors", ea.synthetic, "Generated distractors added with --manifest");
    evaluate->add_option("--folds", ea.folds, "svm-weights folds (0: leave one group out)");
    evaluate->add_option("--profile", ea.profile, "Weight profile for svm-weights-cross");
    evaluate->add_option("-o,--out", ea.out, "Report output (default: stdout)");

    InspectArgs ina;
    auto* inspect = app.add_subcommand("inspect", "Show a stored record's feature-vector");
    add_common(inspect);
    inspect->add_option("id", ina.id, "Function id");
    inspect->add_flag("--list", ina.list, "List record ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*index) return run_index(common, ia);
        if (*query) return run_query(common, qa);
        if (*thresholds) return run_thresholds(common, ta);
        if (*train) return run_train(common, tra);
        if (*evaluate) return run_evaluate(common, ea);
        if (*inspect) return run_inspect(common, ina);
    } catch (const InvalidArgument& e) {
        std::cerr << "codesift: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "codesift: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "codesift: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
