#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace codesift {

/// The sixteen feature-classes. The enumerator order fixes the slot position
/// of each class inside a FeatureVector, a SimilarityVector and a WeightProfile.
enum class FeatureClass : std::uint8_t
{
    TypeOpCoupling,
    SkeletonTree,
    DecoratedSkeletonTree,
    WeightedNlTerms,
    Cfg3Bfs,
    Cfg4Bfs,
    Cfg3Dfs,
    Cfg4Dfs,
    ModeledLibCalls,
    UnmodeledLibCalls,
    UserLibCalls,
    TypeSignature,
    LocalTypes,
    NumericLiterals,
    StringLiterals,
    Comments,
};

inline constexpr std::size_t kNumFeatureClasses = 16;

/// Storage shape of a class's observation.
enum class ObservationKind : std::uint8_t
{
    TermSet,
    PairSet,
    ShapeMultiset,
    TypeMultiset,
    LabeledTree,
    WeightedTermMap,
};

inline constexpr std::array<FeatureClass, kNumFeatureClasses> kAllFeatureClasses = {
    FeatureClass::TypeOpCoupling,  FeatureClass::SkeletonTree,      FeatureClass::DecoratedSkeletonTree,
    FeatureClass::WeightedNlTerms, FeatureClass::Cfg3Bfs,           FeatureClass::Cfg4Bfs,
    FeatureClass::Cfg3Dfs,         FeatureClass::Cfg4Dfs,           FeatureClass::ModeledLibCalls,
    FeatureClass::UnmodeledLibCalls, FeatureClass::UserLibCalls,    FeatureClass::TypeSignature,
    FeatureClass::LocalTypes,      FeatureClass::NumericLiterals,   FeatureClass::StringLiterals,
    FeatureClass::Comments,
};

[[nodiscard]] constexpr std::size_t index_of(FeatureClass c) noexcept
{
    return static_cast<std::size_t>(c);
}

[[nodiscard]] constexpr FeatureClass class_at(std::size_t i) noexcept
{
    return static_cast<FeatureClass>(i);
}

[[nodiscard]] constexpr std::string_view to_string(FeatureClass c) noexcept
{
    constexpr std::array<std::string_view, kNumFeatureClasses> names = {
        "type-op-coupling", "skeleton-tree",      "decorated-skeleton-tree", "weighted-nl-terms",
        "3-graph-cfg-bfs",  "4-graph-cfg-bfs",    "3-graph-cfg-dfs",         "4-graph-cfg-dfs",
        "modeled-lib-calls", "unmodeled-lib-calls", "user-lib-calls",        "type-signature",
        "local-types",      "numeric-literals",   "string-literals",         "comments",
    };
    return names[index_of(c)];
}

[[nodiscard]] constexpr std::optional<FeatureClass> parse_feature_class(std::string_view s) noexcept
{
    for (FeatureClass c : kAllFeatureClasses) {
        if (to_string(c) == s) {
            return c;
        }
    }
    return std::nullopt;
}

[[nodiscard]] constexpr ObservationKind kind_of(FeatureClass c) noexcept
{
    switch (c) {
    case FeatureClass::TypeOpCoupling:
    case FeatureClass::ModeledLibCalls:
    case FeatureClass::UnmodeledLibCalls:
    case FeatureClass::UserLibCalls:
        return ObservationKind::PairSet;
    case FeatureClass::SkeletonTree:
    case FeatureClass::DecoratedSkeletonTree:
        return ObservationKind::LabeledTree;
    case FeatureClass::WeightedNlTerms:
        return ObservationKind::WeightedTermMap;
    case FeatureClass::Cfg3Bfs:
    case FeatureClass::Cfg4Bfs:
    case FeatureClass::Cfg3Dfs:
    case FeatureClass::Cfg4Dfs:
        return ObservationKind::ShapeMultiset;
    case FeatureClass::TypeSignature:
        return ObservationKind::TypeMultiset;
    case FeatureClass::LocalTypes:
    case FeatureClass::NumericLiterals:
    case FeatureClass::StringLiterals:
    case FeatureClass::Comments:
        return ObservationKind::TermSet;
    }
    return ObservationKind::TermSet;
}

} // namespace codesift
