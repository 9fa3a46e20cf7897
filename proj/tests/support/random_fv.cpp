#include "random_fv.hpp"

#include <functional>

namespace codesift::testkit {

namespace {

std::string key(std::mt19937_64& rng, std::size_t vocabulary, const char* prefix)
{
    return prefix + std::to_string(std::uniform_int_distribution<std::size_t>(0, vocabulary - 1)(rng));
}

} // namespace

LabeledTree random_tree(std::mt19937_64& rng, std::size_t nodes, std::size_t alphabet)
{
    LabeledTree t;
    if (nodes == 0) {
        return t;
    }
    std::vector<std::size_t> parent(nodes, 0);
    std::vector<std::string> label(nodes);
    std::uniform_int_distribution<std::size_t> pick_label(0, alphabet - 1);
    for (std::size_t i = 0; i < nodes; ++i) {
        label[i] = std::string(1, static_cast<char>('a' + pick_label(rng)));
        if (i > 0) {
            parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        }
    }
    std::function<TreeNode(std::size_t)> build = [&](std::size_t i) {
        TreeNode n{label[i], {}};
        for (std::size_t j = i + 1; j < nodes; ++j) {
            if (parent[j] == i) {
                n.children.push_back(build(j));
            }
        }
        return n;
    };
    t.root = build(0);
    return t;
}

FeatureObservation random_observation(std::mt19937_64& rng, ObservationKind kind, const RandomVectorOptions& opts)
{
    if (std::bernoulli_distribution(opts.empty_probability)(rng)) {
        return empty_observation(kind);
    }
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, opts.max_items)(rng);
    switch (kind) {
    case ObservationKind::TermSet: {
        TermSet s;
        for (std::size_t i = 0; i < n; ++i) {
            s.insert(key(rng, opts.vocabulary, "t"));
        }
        return s;
    }
    case ObservationKind::PairSet: {
        PairSet s;
        for (std::size_t i = 0; i < n; ++i) {
            s.emplace(key(rng, 3, "ty"), key(rng, opts.vocabulary / 3 + 1, "op"));
        }
        return s;
    }
    case ObservationKind::ShapeMultiset: {
        ShapeMultiset m;
        for (std::size_t i = 0; i < n; ++i) {
            m[std::uniform_int_distribution<std::uint64_t>(0, opts.vocabulary - 1)(rng) * 17] +=
                std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
        }
        return m;
    }
    case ObservationKind::TypeMultiset: {
        TypeMultiset m;
        for (std::size_t i = 0; i < n; ++i) {
            m[key(rng, 4, "type")] += std::uniform_int_distribution<std::uint32_t>(1, 3)(rng);
        }
        return m;
    }
    case ObservationKind::LabeledTree:
        return random_tree(rng, std::uniform_int_distribution<std::size_t>(1, opts.max_tree_nodes)(rng));
    case ObservationKind::WeightedTermMap: {
        WeightedTermMap m;
        for (std::size_t i = 0; i < n; ++i) {
            m[key(rng, opts.vocabulary, "w")] = std::uniform_real_distribution<double>(0.05, 4.0)(rng);
        }
        return m;
    }
    }
    return TermSet{};
}

FeatureVector random_feature_vector(std::mt19937_64& rng, const RandomVectorOptions& opts)
{
    FeatureVector fv;
    for (FeatureClass c : kAllFeatureClasses) {
        fv.set(c, random_observation(rng, kind_of(c), opts));
    }
    return fv;
}

} // namespace codesift::testkit
