#include "codesift/frontend/types.hpp"

#include <array>

namespace codesift::frontend::types {

namespace {

int rank(std::string_view t) noexcept
{
    constexpr std::array<std::string_view, 9> order = {
        "int", "unsigned int", "long", "unsigned long", "long long", "unsigned long long",
        "float", "double", "long double",
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] == t) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

} // namespace

bool is_pointer(std::string_view t) noexcept
{
    return !t.empty() && (t.back() == '*' || t.ends_with("[]"));
}

bool is_array(std::string_view t) noexcept
{
    return t.ends_with("[]");
}

bool is_aggregate(std::string_view t) noexcept
{
    return (t.starts_with("struct ") || t.starts_with("union ")) && !is_pointer(t);
}

std::string decay(std::string_view t)
{
    if (is_array(t)) {
        return std::string(t.substr(0, t.size() - 2)) + "*";
    }
    return std::string(t);
}

std::optional<std::string> deref(std::string_view t)
{
    if (is_array(t)) {
        return std::string(t.substr(0, t.size() - 2));
    }
    if (!t.empty() && t.back() == '*') {
        return std::string(t.substr(0, t.size() - 1));
    }
    return std::nullopt;
}

std::string promote(std::string_view t)
{
    if (t == "char" || t == "signed char" || t == "unsigned char" || t == "short" || t == "unsigned short" ||
        t == "bool" || t.starts_with("enum ")) {
        return "int";
    }
    return std::string(t);
}

std::string common_type(std::string_view a, std::string_view b)
{
    std::string pa = promote(a);
    std::string pb = promote(b);
    int ra = rank(pa);
    int rb = rank(pb);
    if (ra < 0) {
        return pa;
    }
    if (rb < 0) {
        return pb;
    }
    return ra >= rb ? pa : pb;
}

std::optional<std::string> operand_type(const AstNode& op)
{
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    if (!op.children.empty()) {
        lhs = op.children.front().type_of;
    }
    if (op.children.size() > 1) {
        rhs = op.children[1].type_of;
    }
    if (op.kind == NodeKind::UnaryOp || op.children.size() == 1) {
        return lhs ? std::optional<std::string>(promote(*lhs)) : std::nullopt;
    }
    if (lhs && is_pointer(*lhs)) {
        return decay(*lhs);
    }
    if (rhs && is_pointer(*rhs)) {
        return decay(*rhs);
    }
    if (op.label == "<<" || op.label == ">>") {
        return lhs ? std::optional<std::string>(promote(*lhs)) : std::nullopt;
    }
    if (lhs && rhs) {
        return common_type(*lhs, *rhs);
    }
    if (lhs) {
        return promote(*lhs);
    }
    if (rhs) {
        return promote(*rhs);
    }
    return std::nullopt;
}

} // namespace codesift::frontend::types
