#pragma once

#include "codesift/core/observation.hpp"
#include "codesift/core/weights.hpp"
#include "codesift/simkit/similarity.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace codesift::store {

/// A feature-vector with every observation interned to integer ids. Slot c
/// occupies data[off[c] .. off[c+1]):
///   sets        sorted ids
///   multisets   (id, count) pairs sorted by id
///   trees       preorder ids followed by postorder ids
///   term maps   ids in term-string order, weights in `weights`
struct CompactVector
{
    std::vector<std::uint32_t> data;
    std::array<std::uint32_t, kNumFeatureClasses + 1> off{};
    std::vector<double> weights;
    double norm2 = 0.0;
};

/// Read-only interned form of a set of feature-vectors. Scores computed here
/// are bit-identical to the reference functions in simkit.
class SearchIndex
{
  public:
    class Builder
    {
      public:
        Builder();
        void add(std::string id, const FeatureVector& fv);
        /// Sorts records by id and renumbers term ids into string order.
        [[nodiscard]] SearchIndex finish() &&;

      private:
        friend class SearchIndex;
        std::uint32_t intern(std::size_t cls, const std::string& key);
        std::vector<std::string> ids_;
        std::vector<CompactVector> vectors_;
        std::array<std::unordered_map<std::string, std::uint32_t>, kNumFeatureClasses> dict_;
    };

    SearchIndex() = default;

    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] const std::string& id(std::size_t i) const { return ids_[i]; }
    [[nodiscard]] const std::vector<std::string>& ids() const noexcept { return ids_; }
    /// Position of `id`, or size() if absent.
    [[nodiscard]] std::size_t position(const std::string& id) const;
    [[nodiscard]] const CompactVector& vector(std::size_t i) const { return vectors_[i]; }

    /// Interns a query; observations never seen at build time get fresh ids.
    [[nodiscard]] CompactVector compile(const FeatureVector& fv) const;

    [[nodiscard]] double class_similarity(const CompactVector& a, const CompactVector& b, FeatureClass c) const;
    [[nodiscard]] SimilarityVector similarity_vector(const CompactVector& a, const CompactVector& b) const;
    /// Combined score; classes with zero weight are skipped. The caller guarantees a positive weight sum.
    [[nodiscard]] double combined(const CompactVector& a, const CompactVector& b, const WeightProfile& w) const;

    simkit::TreeDistanceConfig tree_config;

  private:
    std::vector<std::string> ids_;
    std::vector<CompactVector> vectors_;
    std::array<std::unordered_map<std::string, std::uint32_t>, kNumFeatureClasses> dict_;
};

} // namespace codesift::store
