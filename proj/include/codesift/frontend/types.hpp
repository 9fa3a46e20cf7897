#pragma once

#include "codesift/frontend/ast.hpp"

#include <optional>
#include <string>
#include <string_view>

// Helpers over canonical type spellings: "int", "unsigned long", "char*",
// "struct Bar", "int[]". Spellings carry no qualifiers or storage classes.
namespace codesift::frontend::types {

[[nodiscard]] bool is_pointer(std::string_view t) noexcept;
[[nodiscard]] bool is_array(std::string_view t) noexcept;
[[nodiscard]] bool is_aggregate(std::string_view t) noexcept;

/// "T[]" -> "T*"; other spellings unchanged.
[[nodiscard]] std::string decay(std::string_view t);
/// Pointee or element type; nullopt for non-pointer types.
[[nodiscard]] std::optional<std::string> deref(std::string_view t);
/// Integer promotion: char/short/bool/enum types become "int".
[[nodiscard]] std::string promote(std::string_view t);
/// Usual arithmetic conversions; spellings without a known rank (size_t,
/// struct types) win over ranked ones, and the left side wins a tie of unknowns.
[[nodiscard]] std::string common_type(std::string_view a, std::string_view b);

/// Type an operator acts on, for the type-operation coupling class: the
/// pointer operand for pointer arithmetic and comparisons, otherwise the
/// common arithmetic type of the operands. nullopt when no operand type is known.
[[nodiscard]] std::optional<std::string> operand_type(const AstNode& op);

} // namespace codesift::frontend::types
