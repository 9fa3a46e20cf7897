#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace codesift::frontend {

enum class TokenKind
{
    Identifier,
    Number,
    CharLiteral,
    StringLiteral,
    Punct,
    End,
};

struct Token
{
    TokenKind kind = TokenKind::End;
    std::string text;   // exact spelling; for strings/chars includes the quotes
    std::size_t offset = 0;
    std::size_t line = 1;

    [[nodiscard]] bool is(std::string_view s) const noexcept
    {
        return (kind == TokenKind::Punct || kind == TokenKind::Identifier) && text == s;
    }
};

struct RawComment
{
    std::string text;   // without the comment delimiters
    std::size_t offset = 0;
    std::size_t line = 1;
};

struct LexResult
{
    std::vector<Token> tokens;   // always terminated by an End token
    std::vector<RawComment> comments;
};

/// Splits C-subset source into tokens. Comments are collected on the side and
/// preprocessor lines are skipped. Throws ParseError on malformed input.
[[nodiscard]] LexResult lex(std::string_view text, const std::string& path);

} // namespace codesift::frontend
