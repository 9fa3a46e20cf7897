#pragma once

#include "codesift/frontend/function_ir.hpp"

#include <string_view>
#include <vector>

namespace codesift::frontend {

/// Parses a C-subset translation unit (grammar in docs/c-subset.md) into one
/// FunctionIR per function definition, in source order. Empty or
/// whitespace-only text is rejected with ParseError; a unit containing only
/// declarations yields an empty sequence.
[[nodiscard]] std::vector<FunctionIR> parse_unit(const SourceUnit& unit);

/// Canonical spelling of a numeric constant token: integers in decimal,
/// floating constants in shortest round-trip form. Returns "" if malformed.
[[nodiscard]] std::string canonical_number(std::string_view spelling);

} // namespace codesift::frontend
