#pragma once

#include "codesift/core/errors.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace codesift::eval {

class EmptyRelevantSet : public InvalidArgument
{
  public:
    EmptyRelevantSet() : InvalidArgument("average precision needs at least one relevant item") {}
};

/// (sum over k of P(k) * r(k)) / R over the full ranking; relevant items
/// missing from `ranked` contribute nothing.
[[nodiscard]] double average_precision(const std::vector<std::string>& ranked, const std::set<std::string>& relevant);

/// Same, from the 1-based ranks of the retrieved relevant items and the relevant-set size R.
[[nodiscard]] double average_precision_from_ranks(std::vector<std::size_t> ranks, std::size_t relevant_count);

/// Arithmetic mean; InvalidArgument for an empty list.
[[nodiscard]] double mean_average_precision(const std::vector<double>& aps);

} // namespace codesift::eval
