#include "codesift/frontend/ast.hpp"

namespace codesift::frontend {

std::string_view to_string(NodeKind kind) noexcept
{
    switch (kind) {
    case NodeKind::FunctionDef: return "function-def";
    case NodeKind::Seq: return "seq";
    case NodeKind::ForLoop: return "for-loop";
    case NodeKind::WhileLoop: return "while-loop";
    case NodeKind::DoWhileLoop: return "do-while-loop";
    case NodeKind::IfCond: return "if-cond";
    case NodeKind::SwitchCond: return "switch-cond";
    case NodeKind::CaseLabel: return "case-label";
    case NodeKind::BinaryOp: return "binary-op";
    case NodeKind::UnaryOp: return "unary-op";
    case NodeKind::Ternary: return "ternary";
    case NodeKind::Assignment: return "assignment";
    case NodeKind::Call: return "call";
    case NodeKind::FieldAccess: return "field-access";
    case NodeKind::Subscript: return "subscript";
    case NodeKind::Cast: return "cast";
    case NodeKind::Identifier: return "identifier";
    case NodeKind::NumericLiteral: return "numeric-literal";
    case NodeKind::StringLiteral: return "string-literal";
    case NodeKind::Declaration: return "declaration";
    case NodeKind::Return: return "return";
    case NodeKind::Break: return "break";
    case NodeKind::Continue: return "continue";
    }
    return "?";
}

bool is_loop(NodeKind kind) noexcept
{
    return kind == NodeKind::ForLoop || kind == NodeKind::WhileLoop || kind == NodeKind::DoWhileLoop;
}

bool is_conditional(NodeKind kind) noexcept
{
    return kind == NodeKind::IfCond || kind == NodeKind::SwitchCond;
}

bool is_expression(NodeKind kind) noexcept
{
    switch (kind) {
    case NodeKind::BinaryOp:
    case NodeKind::UnaryOp:
    case NodeKind::Ternary:
    case NodeKind::Assignment:
    case NodeKind::Call:
    case NodeKind::FieldAccess:
    case NodeKind::Subscript:
    case NodeKind::Cast:
    case NodeKind::Identifier:
    case NodeKind::NumericLiteral:
    case NodeKind::StringLiteral:
        return true;
    default:
        return false;
    }
}

namespace {

void dump_into(const AstNode& node, std::string& out)
{
    out += '(';
    out += to_string(node.kind);
    if (!node.label.empty()) {
        out += ':';
        out += node.label;
    }
    for (const auto& c : node.children) {
        out += ' ';
        dump_into(c, out);
    }
    out += ')';
}

} // namespace

std::string dump(const AstNode& node)
{
    std::string out;
    dump_into(node, out);
    return out;
}

} // namespace codesift::frontend
