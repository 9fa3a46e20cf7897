#include "codesift/eval/benchmark.hpp"

#include "codesift/eval/metrics.hpp"
#include "codesift/eval/synthetic.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>

namespace codesift::eval {

namespace {

struct Query
{
    std::string id;
    std::string group;
    std::uint32_t pos;
    std::vector<std::uint32_t> mates;
};

std::vector<Query> make_queries(const GroundTruth& gt, const store::SearchIndex& index)
{
    std::vector<Query> out;
    for (const auto& [name, ids] : gt.groups) {
        std::vector<std::uint32_t> pos;
        for (const auto& id : ids) {
            std::size_t p = index.position(id);
            if (p == index.size()) {
                throw MissingId(id);
            }
            pos.push_back(static_cast<std::uint32_t>(p));
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            Query q{ids[i], name, pos[i], {}};
            for (std::size_t j = 0; j < ids.size(); ++j) {
                if (j != i) {
                    q.mates.push_back(pos[j]);
                }
            }
            out.push_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end(), [](const Query& a, const Query& b) { return a.id < b.id; });
    return out;
}

/// AP of one query whose search set is its group-mates plus `distractors`.
double query_ap(const store::SearchIndex& index, const Query& q, const WeightProfile& w,
                const std::vector<std::uint32_t>& distractors)
{
    const auto& qv = index.vector(q.pos);
    std::vector<std::pair<double, std::uint32_t>> mates;
    for (auto m : q.mates) {
        mates.emplace_back(index.combined(qv, index.vector(m), w), m);
    }
    std::vector<double> dscores;
    dscores.reserve(distractors.size());
    for (auto d : distractors) {
        dscores.push_back(index.combined(qv, index.vector(d), w));
    }
    auto beats = [](double s, std::uint32_t p, double t, std::uint32_t r) { return s > t || (s == t && p < r); };
    std::vector<std::size_t> ranks;
    for (const auto& [s, p] : mates) {
        std::size_t rank = 1;
        for (const auto& [s2, p2] : mates) {
            rank += beats(s2, p2, s, p) ? 1 : 0;
        }
        for (std::size_t i = 0; i < distractors.size(); ++i) {
            rank += beats(dscores[i], distractors[i], s, p) ? 1 : 0;
        }
        ranks.push_back(rank);
    }
    return average_precision_from_ranks(std::move(ranks), q.mates.size());
}

WeightProfile random_profile(std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(0.5);
    WeightProfile w;
    do {
        for (auto& x : w.w) {
            x = coin(rng) ? 1.0 : 0.0;
        }
    } while (w.sum() == 0.0);
    return w;
}

Groups subset(const GroundTruth& gt, const std::vector<std::string>& names)
{
    Groups g;
    for (const auto& n : names) {
        g.emplace(n, gt.groups.at(n));
    }
    return g;
}

} // namespace

std::string config_name(const EvalConfig& cfg)
{
    switch (cfg.kind) {
    case ConfigKind::Solo: return "solo-" + std::string(to_string(cfg.solo));
    case ConfigKind::EqualAll: return "equal-all";
    case ConfigKind::DynSelect: return "dyn-select";
    case ConfigKind::RandSelect: return "rand-select";
    case ConfigKind::SvmWeights: return "svm-weights";
    case ConfigKind::SvmWeightsCross: return "svm-weights-cross";
    }
    return "?";
}

EvalConfig parse_config_name(const std::string& name)
{
    EvalConfig cfg;
    if (name == "equal-all") {
        cfg.kind = ConfigKind::EqualAll;
    } else if (name == "dyn-select") {
        cfg.kind = ConfigKind::DynSelect;
    } else if (name == "rand-select") {
        cfg.kind = ConfigKind::RandSelect;
    } else if (name == "svm-weights") {
        cfg.kind = ConfigKind::SvmWeights;
    } else if (name == "svm-weights-cross") {
        cfg.kind = ConfigKind::SvmWeightsCross;
    } else if (name.starts_with("solo-")) {
        auto c = parse_feature_class(std::string_view(name).substr(5));
        if (!c) {
            throw InvalidArgument("unknown feature-class in configuration '" + name + "'");
        }
        cfg.kind = ConfigKind::Solo;
        cfg.solo = *c;
    } else {
        throw InvalidArgument("unknown configuration '" + name + "'");
    }
    return cfg;
}

std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
kfold_split(const GroundTruth& gt, std::size_t folds, std::uint64_t seed)
{
    if (folds < 2 || folds > gt.groups.size()) {
        throw TooManyFolds("cannot split " + std::to_string(gt.groups.size()) + " groups into " +
                           std::to_string(folds) + " folds");
    }
    std::vector<std::string> names;
    for (const auto& [name, ids] : gt.groups) {
        names.push_back(name);
    }
    std::mt19937_64 rng(seed);
    std::shuffle(names.begin(), names.end(), rng);
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out(folds);
    for (std::size_t f = 0; f < folds; ++f) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            (i % folds == f ? out[f].second : out[f].first).push_back(names[i]);
        }
        std::sort(out[f].first.begin(), out[f].first.end());
        std::sort(out[f].second.begin(), out[f].second.end());
    }
    return out;
}

std::vector<std::uint32_t> distractor_pool(const GroundTruth& gt, const store::CodeDatabase& db)
{
    const auto& index = db.index();
    std::set<std::string> members;
    for (const auto& [name, ids] : gt.groups) {
        members.insert(ids.begin(), ids.end());
    }
    std::vector<std::uint32_t> flagged;
    std::vector<std::uint32_t> outside;
    for (std::size_t i = 0; i < index.size(); ++i) {
        const std::string& id = index.id(i);
        if (members.count(id) != 0) {
            continue;
        }
        outside.push_back(static_cast<std::uint32_t>(i));
        if (db.get(id).distractor) {
            flagged.push_back(static_cast<std::uint32_t>(i));
        }
    }
    return flagged.empty() ? outside : flagged;
}

ConfigReport run_benchmark(const GroundTruth& gt, const store::CodeDatabase& db, const EvalConfig& cfg)
{
    validate(gt);
    const auto start = std::chrono::steady_clock::now();
    const auto& index = db.index();
    const auto queries = make_queries(gt, index);

    std::vector<std::uint32_t> pool = distractor_pool(gt, db);
    if (cfg.distractor_count > pool.size()) {
        throw InsufficientDistractors("requested " + std::to_string(cfg.distractor_count) +
                                      " distractors but the pool holds " + std::to_string(pool.size()));
    }
    std::vector<std::uint32_t> distractors = pool;
    if (cfg.distractor_count != 0 && cfg.distractor_count < pool.size()) {
        distractors = dynselect::draw_sample(index, cfg.distractor_count, cfg.seed, &pool).members;
        std::sort(distractors.begin(), distractors.end());
    }

    ConfigReport report;
    report.name = config_name(cfg);
    report.distractors = distractors.size();
    std::map<std::string, double> ap;

    switch (cfg.kind) {
    case ConfigKind::Solo:
    case ConfigKind::EqualAll:
    case ConfigKind::SvmWeightsCross: {
        WeightProfile w = cfg.kind == ConfigKind::Solo       ? WeightProfile::solo(cfg.solo)
                          : cfg.kind == ConfigKind::EqualAll ? WeightProfile::equal_all()
                                                             : load_weight_profile(cfg.profile);
        if (!(w.sum() > 0.0)) {
            throw ZeroWeightSum();
        }
        for (const auto& q : queries) {
            ap[q.id] = query_ap(index, q, w, distractors);
        }
        break;
    }
    case ConfigKind::DynSelect: {
        const std::size_t n = std::min(cfg.selection.n_samp, distractors.size());
        if (n < 2) {
            for (const auto& q : queries) {
                ap[q.id] = query_ap(index, q, WeightProfile::equal_all(), distractors);
                ++report.fallbacks;
            }
            break;
        }
        auto sample = dynselect::draw_sample(index, n, cfg.seed, &distractors);
        auto th = dynselect::class_thresholds(index, sample);
        for (const auto& q : queries) {
            WeightProfile w = dynselect::select_classes(index, index.vector(q.pos), sample, th, cfg.selection);
            report.fallbacks += w.fallback ? 1 : 0;
            ap[q.id] = query_ap(index, q, w, distractors);
        }
        break;
    }
    case ConfigKind::RandSelect: {
        const std::size_t trials = std::max<std::size_t>(cfg.trials, 1);
        for (std::size_t t = 0; t < trials; ++t) {
            std::mt19937_64 rng(cfg.seed * 1000003ULL + t);
            for (const auto& q : queries) {
                ap[q.id] += query_ap(index, q, random_profile(rng), distractors) / static_cast<double>(trials);
            }
        }
        break;
    }
    case ConfigKind::SvmWeights: {
        const std::size_t folds = cfg.folds == 0 ? gt.groups.size() : cfg.folds;
        for (const auto& [train, test] : kfold_split(gt, folds, cfg.seed)) {
            WeightProfile w = WeightProfile::equal_all();
            try {
                auto pairs = weightlearn::build_training_pairs(subset(gt, train), index, distractors, cfg.pairs);
                w = weightlearn::finalize_weights(weightlearn::train_linear(pairs, cfg.train));
            } catch (const weightlearn::AllNonPositive&) {
                ++report.fallbacks;
            } catch (const weightlearn::DegenerateData&) {
                ++report.fallbacks;
            }
            std::set<std::string> test_groups(test.begin(), test.end());
            for (const auto& q : queries) {
                if (test_groups.count(q.group) != 0) {
                    ap[q.id] = query_ap(index, q, w, distractors);
                }
            }
        }
        break;
    }
    }

    std::vector<double> aps;
    for (const auto& q : queries) {
        report.queries.push_back({q.id, q.group, ap.at(q.id)});
        aps.push_back(ap.at(q.id));
    }
    report.map = mean_average_precision(aps);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const EvalReport& report)
{
    nlohmann::json configs = nlohmann::json::array();
    for (const auto& c : report.configs) {
        nlohmann::json queries = nlohmann::json::array();
        for (const auto& q : c.queries) {
            queries.push_back({{"id", q.query}, {"group", q.group}, {"ap", q.ap}});
        }
        configs.push_back({{"name", c.name},
                           {"map", c.map},
                           {"seconds", c.seconds},
                           {"distractors", c.distractors},
                           {"fallbacks", c.fallbacks},
                           {"queries", std::move(queries)}});
    }
    return {{"schema", "codesift-eval-1"}, {"domain", report.domain}, {"configurations", std::move(configs)}};
}

std::string to_text(const EvalReport& report)
{
    std::string out = "domain: " + (report.domain.empty() ? std::string("-") : report.domain) + "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-40s %8s %8s %12s %9s\n", "configuration", "MAP", "queries", "distractors",
                  "seconds");
    out += line;
    for (const auto& c : report.configs) {
        std::snprintf(line, sizeof line, "%-40s %8.4f %8zu %12zu %9.2f\n", c.name.c_str(), c.map, c.queries.size(),
                      c.distractors, c.seconds);
        out += line;
    }
    return out;
}

std::vector<SweepRow> distractor_sweep(const GroundTruth& gt, const store::CodeDatabase& db,
                                       const std::vector<EvalConfig>& configs, const std::vector<std::size_t>& counts)
{
    const std::size_t pool = distractor_pool(gt, db).size();
    std::vector<SweepRow> rows;
    for (std::size_t count : counts) {
        const std::size_t capped = std::min(count, pool);
        for (EvalConfig cfg : configs) {
            cfg.distractor_count = capped;
            ConfigReport r = run_benchmark(gt, db, cfg);
            rows.push_back({r.distractors, r.name, r.map});
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "distractors,configuration,map\n";
    char line[160];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%zu,%s,%.6f\n", r.distractors, r.configuration.c_str(), r.map);
        out += line;
    }
    return out;
}

store::CodeDatabase build_benchmark_database(const std::filesystem::path& manifest, const store::ExtractionResources& res,
                                             std::size_t synthetic, std::uint64_t seed, const store::IndexOptions& opts)
{
    auto m = frontend::load_manifest(manifest);
    auto units = frontend::read_units(m);
    if (synthetic > 0) {
        SyntheticOptions so;
        if (!units.empty()) {
            so.project_id = units.front().unit.project_id;
        }
        auto extra = synthetic_units(synthetic, seed, so);
        units.insert(units.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
    }
    store::CodeDatabase db = store::build_database(units, res, opts);
    std::error_code ec;
    auto root = std::filesystem::weakly_canonical(std::filesystem::absolute(m.root), ec);
    db.meta.corpus_root = ec ? m.root.generic_string() : root.generic_string();
    return db;
}

} // namespace codesift::eval
