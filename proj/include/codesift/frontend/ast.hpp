#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codesift::frontend {

enum class NodeKind
{
    FunctionDef,    // label: name; children: parameter Declarations..., body Seq
    Seq,            // compound statement or statement list; an empty Seq marks an absent for-clause
    ForLoop,        // children: init, cond, step, body
    WhileLoop,      // children: cond, body
    DoWhileLoop,    // children: body, cond
    IfCond,         // children: cond, then[, else]
    SwitchCond,     // children: selector, body
    CaseLabel,      // label: "case <value>" or "default"; children: labeled statement
    BinaryOp,       // label: operator spelling (includes ",")
    UnaryOp,        // label: "-", "+", "!", "~", "*", "&", "++", "--", "post++", "post--", "sizeof"
    Ternary,        // label "?:"; children: cond, then, else
    Assignment,     // label: "=", "+=", ...; children: target, value
    Call,           // label: callee name; children: arguments
    FieldAccess,    // label: ".name" or "->name"; children: aggregate
    Subscript,      // children: base, index
    Cast,           // label: canonical target type; children: operand
    Identifier,
    NumericLiteral, // label: canonical decimal spelling
    StringLiteral,  // label: literal contents without quotes
    Declaration,    // label: variable name; type_of: declared type; children: [initializer]
    Return,         // children: [value]
    Break,
    Continue,
};

[[nodiscard]] std::string_view to_string(NodeKind kind) noexcept;

struct AstNode
{
    NodeKind kind = NodeKind::Seq;
    std::string label;
    std::vector<AstNode> children;
    /// Canonical type of an expression or declaration, when known.
    std::optional<std::string> type_of;
    std::size_t begin = 0;   // byte offsets into the unit text
    std::size_t end = 0;
    std::size_t line = 1;

    bool operator==(const AstNode&) const = default;
};

[[nodiscard]] bool is_loop(NodeKind kind) noexcept;
[[nodiscard]] bool is_conditional(NodeKind kind) noexcept;
[[nodiscard]] bool is_expression(NodeKind kind) noexcept;

/// Lisp-style dump used by `inspect` and tests, e.g. (WhileLoop (BinaryOp:<= ...) ...).
[[nodiscard]] std::string dump(const AstNode& node);

} // namespace codesift::frontend
