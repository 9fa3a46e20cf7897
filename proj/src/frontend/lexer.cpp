#include "codesift/frontend/lexer.hpp"

#include "codesift/core/errors.hpp"

#include <array>
#include <cctype>

namespace codesift::frontend {

namespace {

constexpr std::array<std::string_view, 48> kPuncts = {
    // longest first so that a linear scan performs maximal munch
    "<<=", ">>=", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=",  "-=",  "*=",  "/=", "%=", "&=", "^=", "|=", "(",  ")",  "[",  "]",  "{",  "}",
    ";",   ",",   ":",   "?",  ".",  "+",  "-",  "*",  "/",  "%",  "&",  "|",  "^",  "!",
    "~",   "<",   ">",   "=",  "#",  "\\",
};

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer
{
  public:
    Lexer(std::string_view text, const std::string& path) : text_(text), path_(path) {}

    LexResult run()
    {
        LexResult out;
        bool line_start = true;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
                line_start = true;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++pos_;
                continue;
            }
            if (c == '#' && line_start) {
                skip_directive();
                continue;
            }
            line_start = false;
            if (starts_with("//")) {
                std::size_t begin = pos_;
                std::size_t line = line_;
                pos_ += 2;
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    ++pos_;
                }
                out.comments.push_back({std::string(text_.substr(begin + 2, pos_ - begin - 2)), begin, line});
                continue;
            }
            if (starts_with("/*")) {
                std::size_t begin = pos_;
                std::size_t line = line_;
                std::size_t close = text_.find("*/", pos_ + 2);
                if (close == std::string_view::npos) {
                    fail("unterminated block comment");
                }
                for (std::size_t i = pos_; i < close; ++i) {
                    if (text_[i] == '\n') {
                        ++line_;
                    }
                }
                out.comments.push_back({std::string(text_.substr(begin + 2, close - begin - 2)), begin, line});
                pos_ = close + 2;
                continue;
            }
            out.tokens.push_back(next_token());
        }
        out.tokens.push_back({TokenKind::End, "", text_.size(), line_});
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(path_, line_, msg); }

    [[nodiscard]] bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

    void skip_directive()
    {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
                pos_ += 2;
                ++line_;
                continue;
            }
            ++pos_;
        }
    }

    Token next_token()
    {
        std::size_t begin = pos_;
        char c = text_[pos_];
        if (ident_start(c)) {
            while (pos_ < text_.size() && ident_char(text_[pos_])) {
                ++pos_;
            }
            return make(TokenKind::Identifier, begin);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 ||
            (c == '.' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0)) {
            // pp-number: digits, letters, '.', and signs after an exponent marker
            ++pos_;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if ((d == '+' || d == '-') && (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E' ||
                                               text_[pos_ - 1] == 'p' || text_[pos_ - 1] == 'P')) {
                    ++pos_;
                } else if (ident_char(d) || d == '.') {
                    ++pos_;
                } else {
                    break;
                }
            }
            return make(TokenKind::Number, begin);
        }
        if (c == '"' || c == '\'') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != c) {
                if (text_[pos_] == '\n') {
                    fail("newline in literal");
                }
                if (text_[pos_] == '\\') {
                    ++pos_;
                }
                ++pos_;
            }
            if (pos_ >= text_.size()) {
                fail("unterminated literal");
            }
            ++pos_;
            return make(c == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral, begin);
        }
        for (std::string_view p : kPuncts) {
            if (starts_with(p)) {
                if (p == "#" || p == "\\") {
                    break;
                }
                pos_ += p.size();
                return make(TokenKind::Punct, begin);
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Token make(TokenKind kind, std::size_t begin) const
    {
        return {kind, std::string(text_.substr(begin, pos_ - begin)), begin, line_};
    }

    std::string_view text_;
    const std::string& path_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

} // namespace

LexResult lex(std::string_view text, const std::string& path)
{
    return Lexer(text, path).run();
}

} // namespace codesift::frontend
