#pragma once

#include "codesift/frontend/manifest.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace codesift::eval {

struct SyntheticOptions
{
    std::size_t functions_per_file = 8;
    std::size_t directories = 8;
    std::string root = "synthetic";
    std::string project_id = "synthetic";
};

/// One random C-subset function definition named `name`; `helpers` are
/// names it may call.
[[nodiscard]] std::string synthetic_function(std::mt19937_64& rng, const std::string& name,
                                             const std::vector<std::string>& helpers);

/// `count` random functions spread over files in `directories` sub-directories,
/// flagged as distractors. Deterministic under `seed`.
[[nodiscard]] std::vector<frontend::ManifestUnit> synthetic_units(std::size_t count, std::uint64_t seed,
                                                                  const SyntheticOptions& opts = {});

} // namespace codesift::eval
