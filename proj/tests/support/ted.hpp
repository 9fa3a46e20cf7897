#pragma once

#include "codesift/core/observation.hpp"

#include <cstddef>

namespace codesift::testkit {

/// Exact unit-cost tree edit distance (Zhang and Shasha). Empty trees have size 0.
[[nodiscard]] std::size_t tree_edit_distance(const LabeledTree& a, const LabeledTree& b);

} // namespace codesift::testkit
