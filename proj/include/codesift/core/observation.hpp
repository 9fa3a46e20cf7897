#pragma once

#include "codesift/core/errors.hpp"
#include "codesift/core/feature_class.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace codesift {

using TermSet = std::set<std::string>;
using PairSet = std::set<std::pair<std::string, std::string>>;
/// Encoded k-subgraph shape -> multiplicity.
using ShapeMultiset = std::map<std::uint64_t, std::uint32_t>;
/// Canonical type spelling -> multiplicity.
using TypeMultiset = std::map<std::string, std::uint32_t>;
using WeightedTermMap = std::map<std::string, double>;

struct TreeNode
{
    std::string label;
    std::vector<TreeNode> children;

    bool operator==(const TreeNode&) const = default;
};

/// A skeleton tree. An absent root is the distinguished empty tree.
struct LabeledTree
{
    std::optional<TreeNode> root;

    [[nodiscard]] bool empty() const noexcept { return !root.has_value(); }
    [[nodiscard]] std::size_t size() const noexcept;

    bool operator==(const LabeledTree&) const = default;
};

[[nodiscard]] std::vector<std::string> preorder_labels(const LabeledTree& tree);
[[nodiscard]] std::vector<std::string> postorder_labels(const LabeledTree& tree);

/// Compact bracket form, e.g. "Seq(Loop(Seq(Cond)))". The empty tree prints as "".
[[nodiscard]] std::string to_bracket_string(const LabeledTree& tree);

using FeatureObservation =
    std::variant<TermSet, PairSet, ShapeMultiset, TypeMultiset, LabeledTree, WeightedTermMap>;

[[nodiscard]] ObservationKind kind_of(const FeatureObservation& obs) noexcept;
[[nodiscard]] FeatureObservation empty_observation(ObservationKind kind);
[[nodiscard]] bool is_empty(const FeatureObservation& obs) noexcept;

/// One observation per feature-class, each holding the variant its class declares.
class FeatureVector
{
  public:
    FeatureVector();

    [[nodiscard]] const FeatureObservation& operator[](FeatureClass c) const noexcept
    {
        return slots_[index_of(c)];
    }

    /// Replaces the observation for `c`; throws KindMismatch if the variant is wrong for `c`.
    void set(FeatureClass c, FeatureObservation obs);

    template <typename T>
    [[nodiscard]] const T& get(FeatureClass c) const
    {
        const auto* p = std::get_if<T>(&slots_[index_of(c)]);
        if (p == nullptr) {
            throw KindMismatch(std::string("unexpected observation kind for ") + std::string(to_string(c)));
        }
        return *p;
    }

    [[nodiscard]] const std::array<FeatureObservation, kNumFeatureClasses>& slots() const noexcept
    {
        return slots_;
    }

    bool operator==(const FeatureVector&) const = default;

  private:
    std::array<FeatureObservation, kNumFeatureClasses> slots_;
};

} // namespace codesift
