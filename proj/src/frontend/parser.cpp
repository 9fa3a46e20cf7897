#include "codesift/frontend/parser.hpp"

#include "codesift/core/errors.hpp"
#include "codesift/frontend/lexer.hpp"
#include "codesift/frontend/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <unordered_set>

namespace codesift::frontend {

namespace {

// Type names from the standard headers that the subset accepts without typedefs.
const std::unordered_set<std::string> kBuiltinTypeNames = {
    "size_t",  "ssize_t",  "ptrdiff_t", "FILE",     "int8_t",    "int16_t",   "int32_t",  "int64_t",
    "uint8_t", "uint16_t", "uint32_t",  "uint64_t", "intptr_t",  "uintptr_t", "wchar_t",  "off_t",
    "va_list", "time_t",   "clock_t",   "bool",     "intmax_t",  "uintmax_t", "pid_t",    "mode_t",
};

const std::unordered_set<std::string> kSpecifierWords = {
    "void",   "char",  "short",    "int",      "long",   "float",    "double", "signed", "unsigned",
    "_Bool",  "const", "volatile", "static",   "extern", "register", "inline", "auto",   "restrict",
    "struct", "union", "enum",     "__inline", "__restrict",
};

const std::unordered_set<std::string> kQualifierWords = {
    "const", "volatile", "static", "extern", "register", "inline", "auto", "restrict", "__inline", "__restrict",
};

const std::unordered_set<std::string> kAssignOps = {
    "=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", "&=", "^=", "|=",
};

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

bool is_float_spelling(std::string_view s)
{
    bool hex = s.size() > 1 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X');
    if (hex) {
        return s.find_first_of("pP") != std::string_view::npos;
    }
    return s.find_first_of(".eE") != std::string_view::npos;
}

std::string literal_type(std::string_view spelling)
{
    std::string lower;
    for (char c : spelling) {
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (is_float_spelling(spelling)) {
        if (lower.ends_with('f')) {
            return "float";
        }
        if (lower.ends_with('l')) {
            return "long double";
        }
        return "double";
    }
    std::size_t suffix = lower.find_last_not_of("ul");
    std::string_view suf = std::string_view(lower).substr(suffix + 1);
    bool is_unsigned = suf.find('u') != std::string_view::npos;
    auto longs = std::count(suf.begin(), suf.end(), 'l');
    std::string base = longs >= 2 ? "long long" : longs == 1 ? "long" : "int";
    return is_unsigned ? "unsigned " + base : base;
}

int char_value(std::string_view lit)
{
    // lit includes the surrounding quotes
    std::string_view body = lit.substr(1, lit.size() - 2);
    if (body.empty()) {
        return 0;
    }
    if (body[0] != '\\') {
        return static_cast<unsigned char>(body[0]);
    }
    if (body.size() < 2) {
        return '\\';
    }
    char e = body[1];
    switch (e) {
    case 'n': return '\n';
    case 't': return '\t';
    case 'r': return '\r';
    case '0':
    case '1':
    case '2':
    case '3':
    case '4':
    case '5':
    case '6':
    case '7': {
        int v = 0;
        for (std::size_t i = 1; i < body.size() && i < 4 && body[i] >= '0' && body[i] <= '7'; ++i) {
            v = v * 8 + (body[i] - '0');
        }
        return v;
    }
    case 'x': {
        int v = 0;
        for (std::size_t i = 2; i < body.size() && std::isxdigit(static_cast<unsigned char>(body[i])) != 0; ++i) {
            v = v * 16 + (std::isdigit(static_cast<unsigned char>(body[i])) != 0
                              ? body[i] - '0'
                              : std::tolower(static_cast<unsigned char>(body[i])) - 'a' + 10);
        }
        return v;
    }
    case 'a': return '\a';
    case 'b': return '\b';
    case 'f': return '\f';
    case 'v': return '\v';
    default: return static_cast<unsigned char>(e);
    }
}

struct Scope
{
    std::map<std::string, std::string> vars;
};

class Parser
{
  public:
    Parser(const SourceUnit& unit, LexResult lexed)
        : unit_(unit), toks_(std::move(lexed.tokens)), comments_(std::move(lexed.comments))
    {
        directory_ = std::filesystem::path(unit.path).parent_path().generic_string();
    }

    std::vector<FunctionIR> run()
    {
        scopes_.emplace_back();   // globals
        while (!peek().kind_is_end()) {
            parse_external();
        }
        attach_comments();
        return std::move(functions_);
    }

  private:
    // ---- token helpers -------------------------------------------------

    struct TokRef
    {
        const Token* t;
        [[nodiscard]] bool kind_is_end() const { return t->kind == TokenKind::End; }
    };

    [[nodiscard]] TokRef peek(std::size_t ahead = 0) const
    {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return {&toks_[i]};
    }
    [[nodiscard]] const Token& cur() const { return toks_[pos_]; }
    [[nodiscard]] bool at(std::string_view s) const { return cur().is(s); }

    const Token& advance()
    {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) {
            ++pos_;
        }
        return t;
    }

    bool accept(std::string_view s)
    {
        if (at(s)) {
            advance();
            return true;
        }
        return false;
    }

    const Token& expect(std::string_view s)
    {
        if (!at(s)) {
            fail("expected '" + std::string(s) + "' but found '" + describe(cur()) + "'");
        }
        return advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(unit_.path, cur().line, msg); }

    static std::string describe(const Token& t) { return t.kind == TokenKind::End ? "end of input" : t.text; }

    [[nodiscard]] std::size_t prev_end() const
    {
        const Token& p = toks_[pos_ > 0 ? pos_ - 1 : 0];
        return p.offset + p.text.size();
    }

    // ---- symbols -------------------------------------------------------

    [[nodiscard]] bool is_type_start(const Token& t) const
    {
        if (t.kind != TokenKind::Identifier) {
            return false;
        }
        if (kSpecifierWords.count(t.text) != 0) {
            return true;
        }
        return kBuiltinTypeNames.count(t.text) != 0 && !lookup_var(t.text);
    }

    [[nodiscard]] std::optional<std::string> lookup_var(const std::string& name) const
    {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto f = it->vars.find(name);
            if (f != it->vars.end()) {
                return f->second;
            }
        }
        return std::nullopt;
    }

    void declare(const std::string& name, const std::string& type) { scopes_.back().vars[name] = type; }

    // ---- declarations ---------------------------------------------------

    /// Parses declaration specifiers into a canonical base type.
    std::string parse_specifiers()
    {
        int longs = 0;
        bool is_unsigned = false;
        bool is_signed = false;
        bool is_short = false;
        std::string base;
        bool any = false;
        while (cur().kind == TokenKind::Identifier) {
            const std::string& w = cur().text;
            if (w == "typedef") {
                fail("typedef is outside the supported C subset");
            }
            if (kQualifierWords.count(w) != 0) {
                advance();
                any = true;
            } else if (w == "unsigned") {
                is_unsigned = true;
                advance();
                any = true;
            } else if (w == "signed") {
                is_signed = true;
                advance();
                any = true;
            } else if (w == "short") {
                is_short = true;
                advance();
                any = true;
            } else if (w == "long") {
                ++longs;
                advance();
                any = true;
            } else if (w == "struct" || w == "union" || w == "enum") {
                if (!base.empty()) {
                    break;
                }
                base = parse_tagged_type();
                any = true;
            } else if (base.empty() && (w == "void" || w == "char" || w == "int" || w == "float" || w == "double" ||
                                        w == "_Bool")) {
                base = w == "_Bool" ? "bool" : w;
                advance();
                any = true;
            } else if (base.empty() && !is_unsigned && !is_signed && !is_short && longs == 0 &&
                       kBuiltinTypeNames.count(w) != 0 && !lookup_var(w)) {
                base = w;
                advance();
                any = true;
            } else {
                break;
            }
        }
        if (!any) {
            fail("expected a type but found '" + describe(cur()) + "'");
        }
        if (base == "char") {
            return is_unsigned ? "unsigned char" : is_signed ? "signed char" : "char";
        }
        if (base == "double") {
            return longs > 0 ? "long double" : "double";
        }
        if (!base.empty() && base != "int") {
            return base;
        }
        std::string t = is_short ? "short" : longs >= 2 ? "long long" : longs == 1 ? "long" : "int";
        return is_unsigned ? "unsigned " + t : t;
    }

    std::string parse_tagged_type()
    {
        std::string keyword = advance().text;
        std::string tag;
        if (cur().kind == TokenKind::Identifier && !at("{")) {
            tag = advance().text;
        } else {
            tag = "<anonymous-" + std::to_string(++anonymous_) + ">";
        }
        std::string type = keyword + " " + tag;
        if (at("{")) {
            advance();
            if (keyword == "enum") {
                while (!at("}")) {
                    if (cur().kind != TokenKind::Identifier) {
                        fail("expected enumerator name");
                    }
                    scopes_.front().vars[advance().text] = "int";
                    if (accept("=")) {
                        (void)parse_conditional();
                    }
                    if (!accept(",")) {
                        break;
                    }
                }
                expect("}");
            } else {
                auto& fields = structs_[type];
                while (!at("}")) {
                    std::string base = parse_specifiers();
                    do {
                        auto [name, ftype] = parse_declarator(base);
                        if (accept(":")) {
                            (void)parse_conditional();   // bit-field width
                        }
                        fields[name] = ftype;
                    } while (accept(","));
                    expect(";");
                }
                expect("}");
            }
        }
        return type;
    }

    /// Parses `*`s, the declared name and array suffixes. Function declarators
    /// are handled by the caller.
    std::pair<std::string, std::string> parse_declarator(std::string type, bool allow_abstract = false)
    {
        while (at("*")) {
            advance();
            type += "*";
            while (cur().kind == TokenKind::Identifier && kQualifierWords.count(cur().text) != 0) {
                advance();
            }
        }
        if (at("(")) {
            fail("parenthesized declarators (function pointers) are outside the supported C subset");
        }
        std::string name;
        if (cur().kind == TokenKind::Identifier && kSpecifierWords.count(cur().text) == 0) {
            name = advance().text;
        } else if (!allow_abstract) {
            fail("expected a declarator name but found '" + describe(cur()) + "'");
        }
        while (at("[")) {
            advance();
            if (!at("]")) {
                (void)parse_assignment();
            }
            expect("]");
            type += "[]";
        }
        return {name, type};
    }

    std::vector<Variable> parse_params()
    {
        std::vector<Variable> params;
        expect("(");
        if (at(")")) {
            advance();
            return params;
        }
        if (at("void") && peek(1).t->is(")")) {
            advance();
            advance();
            return params;
        }
        while (true) {
            if (accept("...")) {
                break;
            }
            std::string base = parse_specifiers();
            auto [name, type] = parse_declarator(base, true);
            params.push_back({name, types::decay(type)});
            if (!accept(",")) {
                break;
            }
        }
        expect(")");
        return params;
    }

    void parse_external()
    {
        if (accept(";")) {
            return;
        }
        std::size_t begin = cur().offset;
        std::string base = parse_specifiers();
        if (accept(";")) {
            return;   // struct/union/enum definition only
        }
        while (true) {
            const Token& name_tok = cur();
            auto [name, type] = parse_declarator(base);
            if (at("(")) {
                std::vector<Variable> params = parse_params();
                function_returns_[name] = type;
                if (at("{")) {
                    parse_function_body(begin, name_tok, name, type, std::move(params));
                    return;
                }
            } else {
                declare(name, type);
                if (accept("=")) {
                    (void)parse_initializer();
                }
            }
            if (accept(",")) {
                continue;
            }
            expect(";");
            return;
        }
    }

    void parse_function_body(std::size_t begin, const Token& name_tok, const std::string& name,
                             const std::string& return_type, std::vector<Variable> params)
    {
        FunctionIR fn;
        fn.name = name;
        fn.path = unit_.path;
        fn.directory = directory_;
        fn.project_id = unit_.project_id;
        fn.line = name_tok.line;
        fn.id = make_function_id(unit_.path, name, name_tok.line);
        fn.return_type = return_type;
        fn.params = params;

        AstNode def;
        def.kind = NodeKind::FunctionDef;
        def.label = name;
        def.type_of = return_type;
        def.begin = begin;
        def.line = name_tok.line;

        scopes_.emplace_back();
        for (const auto& p : params) {
            AstNode decl;
            decl.kind = NodeKind::Declaration;
            decl.label = p.name;
            decl.type_of = p.type;
            decl.begin = name_tok.offset;
            decl.end = name_tok.offset + name_tok.text.size();
            decl.line = name_tok.line;
            def.children.push_back(std::move(decl));
            if (!p.name.empty()) {
                declare(p.name, p.type);
            }
        }
        def.children.push_back(parse_compound());
        scopes_.pop_back();
        def.end = prev_end();

        fn.span = {begin, def.end};
        fn.source_text = unit_.text.substr(begin, def.end - begin);
        collect_locals(def.children.back(), fn.locals);
        collect_calls(def.children.back(), fn.calls);
        fn.cfg = build_cfg(def);
        fn.ast = std::move(def);
        functions_.push_back(std::move(fn));
    }

    static void collect_locals(const AstNode& n, std::vector<Variable>& out)
    {
        if (n.kind == NodeKind::Declaration) {
            out.push_back({n.label, n.type_of.value_or("")});
        }
        for (const auto& c : n.children) {
            collect_locals(c, out);
        }
    }

    static void collect_calls(const AstNode& n, std::vector<CallSite>& out)
    {
        if (n.kind == NodeKind::Call) {
            CallSite site;
            site.callee = n.label;
            site.line = n.line;
            out.push_back(std::move(site));
        }
        for (const auto& c : n.children) {
            collect_calls(c, out);
        }
    }

    AstNode parse_initializer()
    {
        if (!at("{")) {
            return parse_assignment();
        }
        AstNode list = node(NodeKind::Seq, "", cur());
        advance();
        while (!at("}")) {
            if (at(".") || at("[")) {
                // designator: skip up to '='
                while (!at("=")) {
                    if (cur().kind == TokenKind::End) {
                        fail("unterminated designated initializer");
                    }
                    advance();
                }
                advance();
            }
            list.children.push_back(parse_initializer());
            if (!accept(",")) {
                break;
            }
        }
        expect("}");
        list.end = prev_end();
        return list;
    }

    // ---- statements ---------------------------------------------------------

    AstNode node(NodeKind kind, std::string label, const Token& at_tok) const
    {
        AstNode n;
        n.kind = kind;
        n.label = std::move(label);
        n.begin = at_tok.offset;
        n.end = at_tok.offset + at_tok.text.size();
        n.line = at_tok.line;
        return n;
    }

    AstNode parse_compound()
    {
        AstNode seq = node(NodeKind::Seq, "", cur());
        expect("{");
        scopes_.emplace_back();
        while (!at("}")) {
            if (cur().kind == TokenKind::End) {
                fail("unexpected end of input inside a block");
            }
            parse_statement_into(seq.children);
        }
        advance();
        scopes_.pop_back();
        seq.end = prev_end();
        return seq;
    }

    /// A single statement in a position that takes exactly one (if/loop bodies).
    AstNode parse_substatement()
    {
        const Token& first = cur();
        std::vector<AstNode> out;
        parse_statement_into(out);
        if (out.size() == 1) {
            return std::move(out.front());
        }
        AstNode seq = node(NodeKind::Seq, "", first);
        seq.children = std::move(out);
        seq.end = prev_end();
        return seq;
    }

    void parse_declaration_into(std::vector<AstNode>& out)
    {
        std::string base = parse_specifiers();
        if (accept(";")) {
            return;
        }
        do {
            const Token& name_tok = cur();
            auto [name, type] = parse_declarator(base);
            if (at("(")) {
                fail("nested function declarations are outside the supported C subset");
            }
            AstNode decl = node(NodeKind::Declaration, name, name_tok);
            decl.type_of = type;
            if (accept("=")) {
                decl.children.push_back(parse_initializer());
            }
            decl.end = prev_end();
            declare(name, type);
            out.push_back(std::move(decl));
        } while (accept(","));
        expect(";");
    }

    void parse_statement_into(std::vector<AstNode>& out)
    {
        const Token& t = cur();
        if (t.is(";")) {
            advance();
            return;
        }
        if (t.is("{")) {
            out.push_back(parse_compound());
            return;
        }
        if (is_type_start(t)) {
            parse_declaration_into(out);
            return;
        }
        if (t.kind == TokenKind::Identifier) {
            if (t.text == "if") {
                AstNode n = node(NodeKind::IfCond, "", t);
                advance();
                expect("(");
                n.children.push_back(parse_expression());
                expect(")");
                n.children.push_back(parse_substatement());
                if (accept("else")) {
                    n.children.push_back(parse_substatement());
                }
                n.end = prev_end();
                out.push_back(std::move(n));
                return;
            }
            if (t.text == "while") {
                AstNode n = node(NodeKind::WhileLoop, "", t);
                advance();
                expect("(");
                n.children.push_back(parse_expression());
                expect(")");
                n.children.push_back(parse_substatement());
                n.end = prev_end();
                out.push_back(std::move(n));
                return;
            }
            if (t.text == "do") {
                AstNode n = node(NodeKind::DoWhileLoop, "", t);
                advance();
                n.children.push_back(parse_substatement());
                expect("while");
                expect("(");
                n.children.push_back(parse_expression());
                expect(")");
                expect(";");
                n.end = prev_end();
                out.push_back(std::move(n));
                return;
            }
            if (t.text == "for") {
                parse_for_into(out);
                return;
            }
            if (t.text == "switch") {
                AstNode n = node(NodeKind::SwitchCond, "", t);
                advance();
                expect("(");
                n.children.push_back(parse_expression());
                expect(")");
                n.children.push_back(parse_substatement());
                n.end = prev_end();
                out.push_back(std::move(n));
                return;
            }
            if (t.text == "case" || t.text == "default") {
                AstNode n = node(NodeKind::CaseLabel, "default", t);
                advance();
                if (t.text == "case") {
                    AstNode value = parse_conditional();
                    n.label = "case " + (value.kind == NodeKind::NumericLiteral || value.kind == NodeKind::Identifier
                                             ? value.label
                                             : std::string("<expr>"));
                    n.children.push_back(std::move(value));
                }
                expect(":");
                if (at("}")) {
                    n.children.push_back(node(NodeKind::Seq, "", cur()));
                } else {
                    n.children.push_back(parse_substatement());
                }
                n.end = prev_end();
                out.push_back(std::move(n));
                return;
            }
            if (t.text == "break" || t.text == "continue") {
                AstNode n = node(t.text == "break" ? NodeKind::Break : NodeKind::Continue, "", t);
                advance();
                expect(";");
                n.end = prev_end();
                out.push_back(std::move(n));
                return;
            }
            if (t.text == "return") {
                AstNode n = node(NodeKind::Return, "", t);
                advance();
                if (!at(";")) {
                    n.children.push_back(parse_expression());
                }
                expect(";");
                n.end = prev_end();
                out.push_back(std::move(n));
                return;
            }
            if (t.text == "goto" || t.text == "typedef" || t.text == "asm" || t.text == "__asm__") {
                fail("'" + t.text + "' is outside the supported C subset");
            }
            if (peek(1).t->is(":") ) {
                fail("statement labels are outside the supported C subset");
            }
        }
        AstNode e = parse_expression();
        expect(";");
        out.push_back(std::move(e));
    }

    void parse_for_into(std::vector<AstNode>& out)
    {
        const Token& t = cur();
        AstNode n = node(NodeKind::ForLoop, "", t);
        advance();
        expect("(");
        scopes_.emplace_back();
        AstNode init = node(NodeKind::Seq, "", cur());
        if (is_type_start(cur())) {
            parse_declaration_into(init.children);
        } else {
            if (!at(";")) {
                init.children.push_back(parse_expression());
            }
            expect(";");
        }
        init.end = prev_end();
        n.children.push_back(init.children.size() == 1 ? std::move(init.children.front()) : std::move(init));

        if (at(";")) {
            n.children.push_back(node(NodeKind::Seq, "", cur()));
        } else {
            n.children.push_back(parse_expression());
        }
        expect(";");
        if (at(")")) {
            n.children.push_back(node(NodeKind::Seq, "", cur()));
        } else {
            n.children.push_back(parse_expression());
        }
        expect(")");
        n.children.push_back(parse_substatement());
        scopes_.pop_back();
        n.end = prev_end();
        out.push_back(std::move(n));
    }

    // ---- expressions -------------------------------------------------------

    AstNode parse_expression()
    {
        AstNode lhs = parse_assignment();
        while (at(",")) {
            const Token& op = advance();
            AstNode rhs = parse_assignment();
            lhs = binary(",", op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    AstNode parse_assignment()
    {
        AstNode lhs = parse_conditional();
        if (cur().kind == TokenKind::Punct && kAssignOps.count(cur().text) != 0) {
            const Token& op = advance();
            AstNode rhs = parse_assignment();
            AstNode n = node(NodeKind::Assignment, op.text, op);
            n.begin = lhs.begin;
            n.end = rhs.end;
            n.line = lhs.line;
            n.type_of = lhs.type_of;
            n.children.push_back(std::move(lhs));
            n.children.push_back(std::move(rhs));
            return n;
        }
        return lhs;
    }

    AstNode parse_conditional()
    {
        AstNode c = parse_binary(0);
        if (at("?")) {
            const Token& q = advance();
            AstNode a = parse_expression();
            expect(":");
            AstNode b = parse_conditional();
            AstNode n = node(NodeKind::Ternary, "?:", q);
            n.begin = c.begin;
            n.end = b.end;
            n.line = c.line;
            n.type_of = a.type_of ? a.type_of : b.type_of;
            n.children.push_back(std::move(c));
            n.children.push_back(std::move(a));
            n.children.push_back(std::move(b));
            return n;
        }
        return c;
    }

    static int precedence(const Token& t)
    {
        if (t.kind != TokenKind::Punct) {
            return -1;
        }
        static const std::map<std::string, int, std::less<>> table = {
            {"||", 0}, {"&&", 1}, {"|", 2},  {"^", 3},  {"&", 4},  {"==", 5}, {"!=", 5}, {"<", 6},  {">", 6},
            {"<=", 6}, {">=", 6}, {"<<", 7}, {">>", 7}, {"+", 8},  {"-", 8},  {"*", 9},  {"/", 9},  {"%", 9},
        };
        auto it = table.find(t.text);
        return it == table.end() ? -1 : it->second;
    }

    AstNode parse_binary(int min_prec)
    {
        AstNode lhs = parse_unary();
        while (true) {
            int prec = precedence(cur());
            if (prec < min_prec) {
                return lhs;
            }
            const Token& op = advance();
            AstNode rhs = parse_binary(prec + 1);
            lhs = binary(op.text, op, std::move(lhs), std::move(rhs));
        }
    }

    AstNode binary(const std::string& op, const Token& tok, AstNode lhs, AstNode rhs) const
    {
        AstNode n = node(NodeKind::BinaryOp, op, tok);
        n.begin = lhs.begin;
        n.end = rhs.end;
        n.line = lhs.line;
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        n.type_of = binary_result_type(n);
        return n;
    }

    static std::optional<std::string> binary_result_type(const AstNode& n)
    {
        const std::string& op = n.label;
        if (op == "," ) {
            return n.children[1].type_of;
        }
        if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "==" || op == "!=" || op == "&&" ||
            op == "||") {
            return std::string("int");
        }
        const auto& l = n.children[0].type_of;
        const auto& r = n.children[1].type_of;
        if (op == "-" && l && r && types::is_pointer(*l) && types::is_pointer(*r)) {
            return std::string("long");
        }
        return types::operand_type(n);
    }

    AstNode parse_unary()
    {
        const Token& t = cur();
        if (t.kind == TokenKind::Punct) {
            if (t.text == "++" || t.text == "--" || t.text == "-" || t.text == "+" || t.text == "!" ||
                t.text == "~" || t.text == "*" || t.text == "&") {
                advance();
                AstNode operand = parse_unary();
                AstNode n = node(NodeKind::UnaryOp, t.text, t);
                n.end = operand.end;
                const auto& ot = operand.type_of;
                if (t.text == "!") {
                    n.type_of = "int";
                } else if (t.text == "*") {
                    if (ot) {
                        n.type_of = types::deref(*ot);
                    }
                } else if (t.text == "&") {
                    if (ot) {
                        n.type_of = types::decay(*ot) == *ot ? *ot + "*" : types::decay(*ot) + "*";
                    }
                } else if (t.text == "++" || t.text == "--") {
                    n.type_of = ot;
                } else if (ot) {
                    n.type_of = types::promote(*ot);
                }
                n.children.push_back(std::move(operand));
                return n;
            }
            if (t.text == "(" && is_type_start(*peek(1).t)) {
                advance();
                std::string base = parse_specifiers();
                auto [name, type] = parse_declarator(base, true);
                (void)name;
                expect(")");
                if (at("{")) {
                    fail("compound literals are outside the supported C subset");
                }
                AstNode operand = parse_unary();
                AstNode n = node(NodeKind::Cast, type, t);
                n.end = operand.end;
                n.type_of = type;
                n.children.push_back(std::move(operand));
                return n;
            }
        }
        if (t.is("sizeof")) {
            advance();
            AstNode n = node(NodeKind::UnaryOp, "sizeof", t);
            n.type_of = "unsigned long";
            if (at("(") && is_type_start(*peek(1).t)) {
                advance();
                std::string base = parse_specifiers();
                (void)parse_declarator(base, true);
                expect(")");
            } else {
                n.children.push_back(parse_unary());
            }
            n.end = prev_end();
            return n;
        }
        return parse_postfix();
    }

    AstNode parse_postfix()
    {
        AstNode e = parse_primary();
        while (true) {
            if (at("[")) {
                const Token& t = advance();
                AstNode index = parse_expression();
                expect("]");
                AstNode n = node(NodeKind::Subscript, "[]", t);
                n.begin = e.begin;
                n.end = prev_end();
                n.line = e.line;
                if (e.type_of && types::is_pointer(*e.type_of)) {
                    n.type_of = types::deref(*e.type_of);
                } else if (index.type_of && types::is_pointer(*index.type_of)) {
                    n.type_of = types::deref(*index.type_of);
                }
                n.children.push_back(std::move(e));
                n.children.push_back(std::move(index));
                e = std::move(n);
            } else if (at("(")) {
                if (e.kind != NodeKind::Identifier) {
                    fail("indirect calls are outside the supported C subset");
                }
                const Token& t = advance();
                AstNode call = node(NodeKind::Call, e.label, t);
                call.begin = e.begin;
                call.line = e.line;
                while (!at(")")) {
                    call.children.push_back(parse_assignment());
                    if (!accept(",")) {
                        break;
                    }
                }
                expect(")");
                call.end = prev_end();
                auto ret = function_returns_.find(call.label);
                if (ret != function_returns_.end()) {
                    call.type_of = ret->second;
                }
                e = std::move(call);
            } else if (at(".") || at("->")) {
                const Token& t = advance();
                if (cur().kind != TokenKind::Identifier) {
                    fail("expected a field name");
                }
                const Token& field = advance();
                AstNode n = node(NodeKind::FieldAccess, t.text + field.text, t);
                n.begin = e.begin;
                n.end = prev_end();
                n.line = e.line;
                std::optional<std::string> agg = e.type_of;
                if (agg && t.text == "->") {
                    agg = types::deref(*agg);
                }
                if (agg) {
                    auto s = structs_.find(*agg);
                    if (s != structs_.end()) {
                        auto f = s->second.find(field.text);
                        if (f != s->second.end()) {
                            n.type_of = f->second;
                        }
                    }
                }
                n.children.push_back(std::move(e));
                e = std::move(n);
            } else if (at("++") || at("--")) {
                const Token& t = advance();
                AstNode n = node(NodeKind::UnaryOp, "post" + t.text, t);
                n.begin = e.begin;
                n.line = e.line;
                n.type_of = e.type_of;
                n.children.push_back(std::move(e));
                e = std::move(n);
            } else {
                return e;
            }
        }
    }

    AstNode parse_primary()
    {
        const Token& t = cur();
        switch (t.kind) {
        case TokenKind::Identifier: {
            if (kSpecifierWords.count(t.text) != 0) {
                fail("unexpected keyword '" + t.text + "' in expression");
            }
            advance();
            AstNode n = node(NodeKind::Identifier, t.text, t);
            n.type_of = lookup_var(t.text);
            return n;
        }
        case TokenKind::Number: {
            advance();
            std::string canon = canonical_number(t.text);
            if (canon.empty()) {
                throw ParseError(unit_.path, t.line, "malformed numeric constant '" + t.text + "'");
            }
            AstNode n = node(NodeKind::NumericLiteral, canon, t);
            n.type_of = literal_type(t.text);
            return n;
        }
        case TokenKind::CharLiteral: {
            advance();
            AstNode n = node(NodeKind::NumericLiteral, std::to_string(char_value(t.text)), t);
            n.type_of = "int";
            return n;
        }
        case TokenKind::StringLiteral: {
            AstNode n = node(NodeKind::StringLiteral, "", t);
            while (cur().kind == TokenKind::StringLiteral) {
                const Token& s = advance();
                n.label += s.text.substr(1, s.text.size() - 2);
            }
            n.end = prev_end();
            n.type_of = "char*";
            return n;
        }
        case TokenKind::Punct:
            if (t.text == "(") {
                advance();
                AstNode e = parse_expression();
                expect(")");
                return e;
            }
            break;
        case TokenKind::End:
            break;
        }
        fail("unexpected '" + describe(t) + "' in expression");
    }

    // ---- comments ---------------------------------------------------------------

    void attach_comments()
    {
        for (const auto& c : comments_) {
            FunctionIR* owner = nullptr;
            for (auto& fn : functions_) {
                if (c.offset >= fn.span.begin && c.offset < fn.span.end) {
                    owner = &fn;
                    break;
                }
            }
            if (owner == nullptr) {
                for (auto& fn : functions_) {
                    if (fn.span.begin > c.offset) {
                        owner = &fn;
                        break;
                    }
                }
            }
            if (owner != nullptr) {
                std::string text = trim(c.text);
                if (!text.empty()) {
                    owner->comments.push_back(std::move(text));
                }
            }
        }
    }

    const SourceUnit& unit_;
    std::vector<Token> toks_;
    std::vector<RawComment> comments_;
    std::size_t pos_ = 0;
    std::string directory_;
    std::vector<Scope> scopes_;
    std::map<std::string, std::map<std::string, std::string>> structs_;
    std::map<std::string, std::string> function_returns_;
    std::vector<FunctionIR> functions_;
    int anonymous_ = 0;
};

} // namespace

std::string canonical_number(std::string_view spelling)
{
    std::string s(spelling);
    if (s.empty()) {
        return {};
    }
    if (is_float_spelling(s)) {
        while (!s.empty() && (s.back() == 'f' || s.back() == 'F' || s.back() == 'l' || s.back() == 'L')) {
            s.pop_back();
        }
        char* endp = nullptr;
        double v = std::strtod(s.c_str(), &endp);
        if (endp != s.c_str() + s.size()) {
            return {};
        }
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }
    while (!s.empty() && (s.back() == 'u' || s.back() == 'U' || s.back() == 'l' || s.back() == 'L')) {
        s.pop_back();
    }
    int base = 10;
    std::string_view digits = s;
    if (s.size() > 1 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        digits.remove_prefix(2);
    } else if (s.size() > 1 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        base = 2;
        digits.remove_prefix(2);
    } else if (s.size() > 1 && s[0] == '0') {
        base = 8;
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        return {};
    }
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        return {};
    }
    return std::to_string(v);
}

std::string make_function_id(const std::string& path, const std::string& name, std::size_t line)
{
    return path + ":" + name + ":" + std::to_string(line);
}

std::string_view to_string(CallResolution r) noexcept
{
    switch (r) {
    case CallResolution::Unresolved: return "unresolved";
    case CallResolution::Local: return "local";
    case CallResolution::UserDefined: return "user-defined";
    case CallResolution::Modeled: return "modeled";
    case CallResolution::Unmodeled: return "unmodeled";
    }
    return "?";
}

std::vector<FunctionIR> parse_unit(const SourceUnit& unit)
{
    if (trim(unit.text).empty()) {
        throw ParseError(unit.path, 1, "empty source text");
    }
    return Parser(unit, lex(unit.text, unit.path)).run();
}

} // namespace codesift::frontend
