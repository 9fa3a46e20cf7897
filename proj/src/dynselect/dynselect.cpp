#include "codesift/dynselect/dynselect.hpp"

#include "codesift/core/errors.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include <json.hpp>

namespace codesift::dynselect {

SamplePool draw_sample(const store::SearchIndex& index, std::size_t n_samp, std::uint64_t seed,
                       const std::vector<std::uint32_t>* population)
{
    std::vector<std::uint32_t> pop;
    if (population != nullptr) {
        pop = *population;
    } else {
        pop.resize(index.size());
        std::iota(pop.begin(), pop.end(), 0U);
    }
    if (n_samp > pop.size()) {
        throw SampleTooLarge("sample of " + std::to_string(n_samp) + " requested from " + std::to_string(pop.size()) +
                             " records");
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n_samp; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pop.size() - 1);
        std::swap(pop[i], pop[pick(rng)]);
    }
    pop.resize(n_samp);
    return {std::move(pop), seed};
}

ClassThresholds class_thresholds(const store::SearchIndex& index, const SamplePool& pool)
{
    const std::size_t n = pool.members.size();
    if (n < 2) {
        throw InvalidArgument("threshold estimation needs at least two sample members");
    }
    ClassThresholds th;
    th.seed = pool.seed;
    th.n_samp = n;
    std::vector<SimilarityVector> sims;
    sims.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = index.vector(pool.members[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            sims.push_back(index.similarity_vector(a, index.vector(pool.members[j])));
        }
    }
    const double p = static_cast<double>(sims.size());
    for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
        double sum = 0.0;
        for (const auto& sv : sims) {
            sum += sv[c];
        }
        const double mean = sum / p;
        double sq = 0.0;
        for (const auto& sv : sims) {
            sq += (sv[c] - mean) * (sv[c] - mean);
        }
        th.threshold[c] = mean + std::sqrt(sq / p);
    }
    return th;
}

WeightProfile select_classes(const store::SearchIndex& index, const store::CompactVector& query,
                             const SamplePool& pool, const ClassThresholds& th, const SelectionConfig& cfg)
{
    WeightProfile w;
    const double n_samp = static_cast<double>(pool.members.size());
    bool any = false;
    for (std::size_t c = 0; c < kNumFeatureClasses; ++c) {
        std::size_t n_sim = 0;
        for (auto m : pool.members) {
            if (index.class_similarity(query, index.vector(m), class_at(c)) > th.threshold[c]) {
                ++n_sim;
            }
        }
        if (static_cast<double>(n_sim) / n_samp < cfg.t_uniq) {
            w.w[c] = 1.0;
            any = true;
        }
    }
    if (!any) {
        w = WeightProfile::equal_all();
        w.fallback = true;
    }
    return w;
}

ThresholdSidecar compute_sidecar(const store::CodeDatabase& db, std::size_t n_samp, std::uint64_t seed)
{
    const auto& index = db.index();
    SamplePool pool = draw_sample(index, n_samp, seed);
    ThresholdSidecar s;
    s.db_digest = db.digest();
    for (auto m : pool.members) {
        s.sample_ids.push_back(index.id(m));
    }
    s.thresholds = class_thresholds(index, pool);
    return s;
}

void save_sidecar(const ThresholdSidecar& s, const std::filesystem::path& path)
{
    nlohmann::json th = nlohmann::json::object();
    for (FeatureClass c : kAllFeatureClasses) {
        th[std::string(to_string(c))] = s.thresholds.threshold[index_of(c)];
    }
    nlohmann::json j = {
        {"db_digest", s.db_digest},
        {"seed", s.thresholds.seed},
        {"n_samp", s.thresholds.n_samp},
        {"sample", s.sample_ids},
        {"thresholds", th},
    };
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

ThresholdSidecar load_sidecar(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        ThresholdSidecar s;
        s.db_digest = j.at("db_digest").get<std::string>();
        s.thresholds.seed = j.at("seed").get<std::uint64_t>();
        s.thresholds.n_samp = j.at("n_samp").get<std::size_t>();
        s.sample_ids = j.at("sample").get<std::vector<std::string>>();
        for (const auto& [key, v] : j.at("thresholds").items()) {
            auto c = parse_feature_class(key);
            if (!c) {
                throw FormatError("unknown feature-class '" + key + "' in " + path.string());
            }
            s.thresholds.threshold[index_of(*c)] = v.get<double>();
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

ThresholdSidecar sidecar_for(const store::CodeDatabase& db, std::size_t n_samp, std::uint64_t seed,
                             const std::optional<std::filesystem::path>& path)
{
    if (path && std::filesystem::exists(*path)) {
        ThresholdSidecar s = load_sidecar(*path);
        if (s.db_digest == db.digest() && s.thresholds.seed == seed && s.thresholds.n_samp == n_samp) {
            return s;
        }
    }
    return compute_sidecar(db, n_samp, seed);
}

std::filesystem::path default_sidecar_path(const std::filesystem::path& db_path)
{
    return std::filesystem::path(db_path.string() + ".thresholds.json");
}

SamplePool pool_from_sidecar(const store::SearchIndex& index, const ThresholdSidecar& s)
{
    SamplePool pool;
    pool.seed = s.thresholds.seed;
    for (const auto& id : s.sample_ids) {
        std::size_t pos = index.position(id);
        if (pos == index.size()) {
            throw MissingId(id);
        }
        pool.members.push_back(static_cast<std::uint32_t>(pos));
    }
    return pool;
}

} // namespace codesift::dynselect
