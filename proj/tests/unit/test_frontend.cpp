#include "codesift/core/errors.hpp"
#include "codesift/frontend/cfg.hpp"
#include "codesift/frontend/lexer.hpp"
#include "codesift/frontend/manifest.hpp"
#include "codesift/frontend/parser.hpp"
#include "codesift/frontend/types.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace codesift;
using namespace codesift::frontend;
namespace fs = std::filesystem;

namespace {

FunctionIR parse_one(const std::string& text, const std::string& path = "dir/f.c")
{
    auto fns = parse_unit({path, text, "p"});
    EXPECT_EQ(fns.size(), 1u);
    return fns.at(0);
}

FunctionIR binsearch()
{
    std::string path = std::string(CODESIFT_SOURCE_DIR) + "/tests/fixtures/binsearch.c";
    return parse_one(read_text_file(path), "fixtures/binsearch.c");
}

std::size_t count_kind(const AstNode& n, NodeKind k)
{
    std::size_t c = n.kind == k ? 1 : 0;
    for (const auto& ch : n.children) {
        c += count_kind(ch, k);
    }
    return c;
}

} // namespace

TEST(Lexer, TokensCommentsAndPreprocessor)
{
    auto r = lex("#include <stdio.h>\nint x = 0x1F; // tail\n/* block\n */ char *s = \"a\\\"b\";\n", "t.c");
    ASSERT_EQ(r.comments.size(), 2u);
    EXPECT_EQ(r.comments[0].text, " tail");
    EXPECT_EQ(r.comments[0].line, 2u);
    EXPECT_EQ(r.comments[1].line, 3u);
    EXPECT_EQ(r.tokens.front().text, "int");
    EXPECT_EQ(r.tokens.front().line, 2u);
    EXPECT_EQ(r.tokens.back().kind, TokenKind::End);
    bool saw_string = false;
    for (const auto& t : r.tokens) {
        if (t.kind == TokenKind::StringLiteral) {
            EXPECT_EQ(t.text, "\"a\\\"b\"");
            saw_string = true;
        }
        EXPECT_NE(t.text, "include");
    }
    EXPECT_TRUE(saw_string);
}

TEST(Lexer, MultiCharPunctuators)
{
    auto r = lex("a <<= b->c ... ++ -- && || != >=", "t.c");
    std::vector<std::string> texts;
    for (const auto& t : r.tokens) {
        if (t.kind != TokenKind::End) {
            texts.push_back(t.text);
        }
    }
    EXPECT_EQ(texts, (std::vector<std::string>{"a", "<<=", "b", "->", "c", "...", "++", "--", "&&", "||", "!=", ">="}));
}

TEST(Lexer, UnterminatedInputsFail)
{
    EXPECT_THROW((void)lex("char *s = \"abc;\n", "t.c"), ParseError);
    try {
        (void)lex("int x;\n/* never closed", "t.c");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.path(), "t.c");
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Parser, BinarySearchFixture)
{
    FunctionIR f = binsearch();
    EXPECT_EQ(f.name, "binSearch");
    EXPECT_EQ(f.id, "fixtures/binsearch.c:binSearch:1");
    EXPECT_EQ(f.directory, "fixtures");
    EXPECT_EQ(f.return_type, "int");
    ASSERT_EQ(f.params.size(), 3u);
    EXPECT_EQ(f.params[1].name, "v");
    EXPECT_EQ(f.params[1].type, "int*");
    ASSERT_EQ(f.locals.size(), 3u);
    EXPECT_EQ(f.locals[2].name, "mid");
    EXPECT_EQ(f.comments, (std::vector<std::string>{"found match", "no match"}));
    EXPECT_EQ(count_kind(f.ast, NodeKind::WhileLoop), 1u);
    EXPECT_EQ(count_kind(f.ast, NodeKind::IfCond), 2u);
    EXPECT_EQ(count_kind(f.ast, NodeKind::Return), 2u);
    EXPECT_TRUE(f.source_text.starts_with("int binSearch("));
    EXPECT_TRUE(f.source_text.ends_with("}"));
}

TEST(Parser, MultipleFunctionsAndDeclarations)
{
    auto fns = parse_unit({"a/b.c",
                           "struct node { int key; struct node *next; };\n"
                           "static int counter = 0;\n"
                           "int f(void);\n"
                           "int f(void) { return counter; }\n"
                           "void g(struct node *n) { n->key = f(); }\n",
                           "p"});
    ASSERT_EQ(fns.size(), 2u);
    EXPECT_EQ(fns[0].name, "f");
    EXPECT_EQ(fns[0].line, 4u);
    EXPECT_TRUE(fns[0].params.empty());
    EXPECT_EQ(fns[1].params.at(0).type, "struct node*");
    ASSERT_EQ(fns[1].calls.size(), 1u);
    EXPECT_EQ(fns[1].calls[0].callee, "f");
}

TEST(Parser, DeclarationsOnlyYieldNothing)
{
    EXPECT_TRUE(parse_unit({"x.c", "int table[4] = {1, 2, 3, 4};\n", "p"}).empty());
}

TEST(Parser, RejectsEmptyAndUnsupported)
{
    EXPECT_THROW((void)parse_unit({"x.c", "  \n\t", "p"}), ParseError);
    EXPECT_THROW((void)parse_unit({"x.c", "int f(void) { goto out; out: return 0; }", "p"}), ParseError);
    EXPECT_THROW((void)parse_unit({"x.c", "typedef int T;", "p"}), ParseError);
    EXPECT_THROW((void)parse_unit({"x.c", "int f(void) { return (1 + ; }", "p"}), ParseError);
}

TEST(Parser, ExpressionTyping)
{
    FunctionIR f = parse_one("double g(int a, char *p) { double d = a * 2.5; return d + p[a]; }");
    ASSERT_EQ(f.locals.size(), 1u);
    EXPECT_EQ(f.locals[0].type, "double");
    std::function<const AstNode*(const AstNode&)> find_mul = [&](const AstNode& n) -> const AstNode* {
        if (n.kind == NodeKind::BinaryOp && n.label == "*") {
            return &n;
        }
        for (const auto& c : n.children) {
            if (auto* r = find_mul(c)) {
                return r;
            }
        }
        return nullptr;
    };
    const AstNode* mul = find_mul(f.ast);
    ASSERT_NE(mul, nullptr);
    EXPECT_EQ(mul->type_of.value_or(""), "double");
}

TEST(Parser, CanonicalNumbers)
{
    EXPECT_EQ(canonical_number("0x1F"), "31");
    EXPECT_EQ(canonical_number("010"), "8");
    EXPECT_EQ(canonical_number("42UL"), "42");
    EXPECT_EQ(canonical_number("1.50"), "1.5");
    EXPECT_EQ(canonical_number("1e3"), "1000");
    EXPECT_EQ(canonical_number("0x"), "");
}

TEST(Cfg, WhileLoopShape)
{
    FunctionIR f = parse_one("int f(int n) { int s = 0; while (n > 0) { s += n; n--; } return s; }");
    const Cfg& g = f.cfg;
    ASSERT_EQ(g.size(), 5u);
    EXPECT_EQ(g.nodes[0].label, "decl");
    EXPECT_EQ(g.nodes[1].label, "while-cond");
    EXPECT_EQ(g.nodes[4].label, "return");
    EXPECT_EQ(g.successors[0], (std::vector<std::size_t>{1}));
    EXPECT_EQ(g.successors[1], (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(g.successors[3], (std::vector<std::size_t>{1}));
    EXPECT_TRUE(g.successors[4].empty());
}

TEST(Cfg, BreakAndContinue)
{
    FunctionIR f = parse_one(
        "int f(int n) { for (int i = 0; i < n; i++) { if (i == 3) continue; if (i == 5) break; n--; } return n; }");
    const Cfg& g = f.cfg;
    EXPECT_EQ(g.nodes[0].label, "decl");
    std::size_t cond = 1;
    EXPECT_EQ(g.nodes[cond].label, "for-cond");
    EXPECT_EQ(g.successors[0], (std::vector<std::size_t>{cond}));
    std::size_t step = 0;
    std::size_t ret = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.nodes[i].label == "for-step") step = i;
        if (g.nodes[i].label == "return") ret = i;
    }
    ASSERT_NE(step, 0u);
    ASSERT_NE(ret, 0u);
    std::size_t first_if = 0;
    std::size_t second_if = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.nodes[i].label == "if-cond") (first_if == 0 ? first_if : second_if) = i;
    }
    EXPECT_EQ(g.successors[first_if].at(0), step);   // continue
    EXPECT_EQ(g.successors[second_if].at(0), ret);   // break
    EXPECT_EQ(g.successors[step], (std::vector<std::size_t>{cond}));
}

TEST(Cfg, EmptyBodyIsEmpty)
{
    EXPECT_TRUE(parse_one("void f(void) { }").cfg.empty());
}

TEST(Types, Helpers)
{
    EXPECT_TRUE(types::is_pointer("char*"));
    EXPECT_TRUE(types::is_array("int[]"));
    EXPECT_EQ(types::decay("int[]"), "int*");
    EXPECT_EQ(types::deref("int**").value_or(""), "int*");
    EXPECT_FALSE(types::deref("int").has_value());
    EXPECT_EQ(types::promote("char"), "int");
    EXPECT_EQ(types::promote("long"), "long");
    EXPECT_EQ(types::common_type("int", "double"), "double");
    EXPECT_EQ(types::common_type("unsigned int", "long"), "long");
    EXPECT_EQ(types::common_type("short", "char"), "int");
}

TEST(Manifest, ExpandsDirectoriesInSortedOrder)
{
    fs::path root = fs::temp_directory_path() / "codesift_manifest_test";
    fs::remove_all(root);
    fs::create_directories(root / "src" / "sub");
    std::ofstream(root / "src" / "b.c") << "int b(void) { return 1; }\n";
    std::ofstream(root / "src" / "sub" / "a.c") << "int a(void) { return 2; }\n";
    std::ofstream(root / "src" / "notes.txt") << "ignored\n";
    std::ofstream(root / "manifest.json") << R"({"files": [{"path": "src", "project_id": "demo"}]})";
    Manifest m = load_manifest(root / "manifest.json");
    auto units = read_units(m);
    ASSERT_EQ(units.size(), 2u);
    EXPECT_EQ(units[0].unit.path, "src/b.c");
    EXPECT_EQ(units[1].unit.path, "src/sub/a.c");
    EXPECT_EQ(units[1].unit.project_id, "demo");
    std::string d1 = manifest_digest(units);
    units[0].unit.text += " ";
    EXPECT_NE(manifest_digest(units), d1);

    std::ofstream(root / "bad.json") << R"([{"project_id": "x"}])";
    EXPECT_THROW((void)load_manifest(root / "bad.json"), FormatError);
    std::ofstream(root / "missing.json") << R"([{"path": "nope.c"}])";
    EXPECT_THROW((void)read_units(load_manifest(root / "missing.json")), IoError);
    fs::remove_all(root);
}
