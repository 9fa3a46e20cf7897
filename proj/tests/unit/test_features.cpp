#include "codesift/features/corpus_index.hpp"
#include "codesift/features/extract.hpp"
#include "codesift/features/idf.hpp"
#include "codesift/features/nl.hpp"
#include "codesift/features/porter.hpp"
#include "codesift/features/subgraph.hpp"
#include "codesift/frontend/manifest.hpp"
#include "codesift/frontend/parser.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace codesift;
using namespace codesift::features;
using namespace codesift::frontend;

namespace {

const std::string kSource = CODESIFT_SOURCE_DIR;

const NlPipeline& nl()
{
    static const NlPipeline p = NlPipeline::load(kSource + "/data");
    return p;
}

CorpusIndex modeled_index()
{
    CorpusIndex idx;
    idx.modeled_names = load_modeled_functions(kSource + "/data/modeled_functions.json");
    return idx;
}

FunctionIR binsearch()
{
    auto fns = parse_unit({"fixtures/binsearch.c", read_text_file(kSource + "/tests/fixtures/binsearch.c"), "p"});
    return fns.at(0);
}

FunctionIR parse_one(const std::string& text, const std::string& path = "d/f.c")
{
    return parse_unit({path, text, "p"}).at(0);
}

std::vector<std::string> words(std::initializer_list<const char*> l)
{
    return {l.begin(), l.end()};
}

} // namespace

TEST(BinarySearchFixture, TypeOperationCoupling)
{
    PairSet expected{{"int", "+"}, {"int", "-"}, {"int", "/"},        {"int", "<"},
                     {"int", "<="}, {"int", ">"}, {"int", "unary-"}, {"int*", "+"}};
    EXPECT_EQ(extract_type_operation_coupling(binsearch()), expected);
}

TEST(BinarySearchFixture, SkeletonTrees)
{
    FunctionIR f = binsearch();
    EXPECT_EQ(to_bracket_string(extract_skeleton_tree(f, false)), "Seq(Loop(Seq(Cond(Seq(Cond)))))");
    EXPECT_EQ(to_bracket_string(extract_skeleton_tree(f, true)),
              "Seq(-, Loop(Seq(<=, /, +, Cond(Seq(<, -, Cond(Seq(>, +)))))), negate)");
}

TEST(BinarySearchFixture, Subgraphs)
{
    ShapeMultiset bfs4 = extract_cfg_subgraphs(binsearch().cfg, 4, Traversal::Bfs);
    EXPECT_EQ(bfs4, (ShapeMultiset{{16912, 4}, {17152, 4}, {24832, 3}}));
    std::size_t total = 0;
    for (const auto& [code, n] : bfs4) {
        total += n;
    }
    EXPECT_EQ(total, 11u);
}

TEST(BinarySearchFixture, TokenSetsAndSignature)
{
    FunctionIR f = binsearch();
    EXPECT_EQ(extract_token_set(f, TokenSetKind::NumericLiterals), (TermSet{"-1", "0", "1", "2"}));
    EXPECT_EQ(extract_token_set(f, TokenSetKind::LocalTypes), (TermSet{"int"}));
    EXPECT_EQ(extract_token_set(f, TokenSetKind::CommentWords), (TermSet{"found", "match", "no"}));
    EXPECT_TRUE(extract_token_set(f, TokenSetKind::StringLiterals).empty());
    EXPECT_EQ(extract_type_signature(f), (TypeMultiset{{"int", 3}, {"int*", 1}}));
}

TEST(BinarySearchFixture, WeightedTerms)
{
    FunctionIR f = binsearch();
    IdfTable idf;
    idf.add_document(nl_term_set(f, nl()));
    WeightedTermMap m = extract_weighted_nl_terms(f, nl(), idf);
    std::vector<std::string> keys;
    for (const auto& [t, w] : m) {
        keys.push_back(t);
    }
    EXPECT_EQ(keys, words({"bin", "found", "high", "low", "match", "mid", "search"}));
    const double unit = std::log(2.0);
    EXPECT_DOUBLE_EQ(m.at("bin"), 5 * unit);
    EXPECT_DOUBLE_EQ(m.at("search"), 5 * unit);
    EXPECT_DOUBLE_EQ(m.at("mid"), unit);
}

TEST(BinarySearchFixture, FullVectorMatchesExtractors)
{
    FunctionIR f = binsearch();
    IdfTable idf;
    FeatureVector fv = extract_feature_vector(f, nl(), idf, modeled_index());
    EXPECT_EQ(fv.get<TermSet>(FeatureClass::Comments), (TermSet{"found", "match", "no"}));
    EXPECT_EQ(fv.get<ShapeMultiset>(FeatureClass::Cfg4Bfs), extract_cfg_subgraphs(f.cfg, 4, Traversal::Bfs));
    EXPECT_EQ(fv.get<ShapeMultiset>(FeatureClass::Cfg3Dfs), extract_cfg_subgraphs(f.cfg, 3, Traversal::Dfs));
    EXPECT_TRUE(fv.get<PairSet>(FeatureClass::ModeledLibCalls).empty());
}

TEST(Encoding, PaperFigureAndChain)
{
    AdjacencyMatrix fig{{0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    EXPECT_EQ(encode_subgraph(fig), 17152u);
    AdjacencyMatrix chain{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    EXPECT_EQ(encode_subgraph(chain), 136u);
    EXPECT_EQ(decode_subgraph(17152, 4), fig);
    EXPECT_THROW((void)decode_subgraph(1, 5), InvalidArgument);
}

TEST(Encoding, RoundTripsAllSmallMatrices)
{
    for (std::uint64_t code = 0; code < 512; ++code) {
        EXPECT_EQ(encode_subgraph(decode_subgraph(code, 3)), code);
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t code = rng() & 0xFFFF;
        EXPECT_EQ(encode_subgraph(decode_subgraph(code, 4)), code);
    }
}

TEST(Traversal, OrdersAndDiscardsShortWalks)
{
    Cfg g;
    g.nodes.resize(4);
    g.successors = {{1, 2}, {3}, {}, {}};
    EXPECT_EQ(traverse(g, 0, 4, Traversal::Bfs), (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(traverse(g, 0, 4, Traversal::Dfs), (std::vector<std::size_t>{0, 1, 3, 2}));
    EXPECT_EQ(extract_cfg_subgraphs(g, 4, Traversal::Bfs).size(), 1u);
    EXPECT_TRUE(extract_cfg_subgraphs(g, 4, Traversal::Bfs).count(encode_subgraph(
        {{0, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}})));
    // from node 1 only 2 nodes are reachable, so no 3-walk starts there
    ShapeMultiset three = extract_cfg_subgraphs(g, 3, Traversal::Bfs);
    std::uint32_t total = 0;
    for (const auto& [c, n] : three) {
        total += n;
    }
    EXPECT_EQ(total, 1u);
    EXPECT_THROW((void)extract_cfg_subgraphs(g, 2, Traversal::Bfs), InvalidArgument);
}

TEST(Traversal, SelfLoopOnDiagonal)
{
    Cfg g;
    g.nodes.resize(3);
    g.successors = {{0, 1}, {2}, {}};
    auto m = extract_cfg_subgraphs(g, 3, Traversal::Bfs);
    EXPECT_EQ(m, (ShapeMultiset{{encode_subgraph({{1, 1, 0}, {0, 0, 1}, {0, 0, 0}}), 1}}));
}

TEST(Nl, IdentifierSplitting)
{
    EXPECT_EQ(split_identifier("parseHTTPHeader"), words({"parse", "HTTP", "Header"}));
    EXPECT_EQ(split_identifier("node_count2x"), words({"node", "count", "x"}));
    EXPECT_EQ(split_words("Found 2 matches!"), words({"found", "2", "matches"}));
}

TEST(Nl, PipelineExamples)
{
    EXPECT_EQ(nl().process("binSearch"), words({"bin", "search"}));
    EXPECT_TRUE(nl().process("TODO_fixme_x").empty());
    EXPECT_EQ(nl().process("running"), words({"run"}));
    EXPECT_EQ(nl().process("parseHTTPHeader"), words({"pars", "http", "header"}));
    EXPECT_EQ(nl().process("hashmap"), words({"hash", "map"}));
}

TEST(Nl, GreedySplitFallsBackToWholeWord)
{
    std::set<std::string> dict{"bin", "search", "binary"};
    EXPECT_EQ(greedy_split("binarysearch", dict), words({"binary", "search"}));
    EXPECT_EQ(greedy_split("qqq", dict), words({"qqq"}));
}

TEST(Porter, ClassicExamples)
{
    EXPECT_EQ(porter_stem("caresses"), "caress");
    EXPECT_EQ(porter_stem("ponies"), "poni");
    EXPECT_EQ(porter_stem("relational"), "relat");
    EXPECT_EQ(porter_stem("hopping"), "hop");
    EXPECT_EQ(porter_stem("generalization"), "gener");
    EXPECT_EQ(porter_stem("sky"), "sky");
}

TEST(Idf, CountsAndMerges)
{
    IdfTable a{"a", 0, {}};
    a.add_document({"x", "y"});
    a.add_document({"x"});
    EXPECT_EQ(a.doc_count, 2u);
    EXPECT_DOUBLE_EQ(a.idf("x"), std::log(2.0));
    EXPECT_DOUBLE_EQ(a.idf("y"), std::log(3.0));
    EXPECT_DOUBLE_EQ(a.idf("never"), std::log(3.0));
    IdfTable b{"b", 0, {}};
    b.add_document({"y"});
    IdfTable m = merge_idf({{"a", a}, {"b", b}});
    EXPECT_EQ(m.doc_count, 3u);
    EXPECT_EQ(m.df.at("y"), 2u);
    EXPECT_DOUBLE_EQ(IdfTable{}.idf("z"), std::log(2.0));
}

TEST(LibraryCalls, ThreeCategories)
{
    FunctionIR caller = parse_one("int f(char *s) { helper(s); local(); printf(\"%s\", s); return mystery(s); }",
                                  "app/f.c");
    CorpusIndex idx = modeled_index();
    idx.add_definition("helper", "lib");
    idx.add_definition("local", "app");
    resolve_calls(caller, idx);
    EXPECT_EQ(extract_library_calls(caller, idx, LibCategory::UserDefined), (PairSet{{"helper", "lib"}}));
    PairSet modeled = extract_library_calls(caller, idx, LibCategory::Modeled);
    ASSERT_EQ(modeled.size(), 1u);
    EXPECT_EQ(*modeled.begin(), (std::pair<std::string, std::string>{"printf", "stdio.h"}));
    EXPECT_EQ(extract_library_calls(caller, idx, LibCategory::Unmodeled).size(), 1u);
}

TEST(TypeOps, CouplingRules)
{
    FunctionIR f = parse_one(
        "struct pt { int x; };\n"
        "double g(struct pt *p, struct pt q, double d, unsigned u) {\n"
        "  d *= 2; u++; p->x = q.x; return d + !u + ~u + a(p[1].x);\n"
        "}\n");
    PairSet s = extract_type_operation_coupling(f);
    EXPECT_TRUE(s.count({"double", "*"}));
    EXPECT_TRUE(s.count({"unsigned int", "post++"}) || s.count({"unsigned int", "++"}));
    EXPECT_TRUE(s.count({"struct pt", "->x"}));
    EXPECT_TRUE(s.count({"struct pt", ".x"}));
    EXPECT_TRUE(s.count({"struct pt*", "+"}));
    EXPECT_TRUE(s.count({"unsigned int", "!"}));
    EXPECT_TRUE(s.count({"unsigned int", "~"}));
    EXPECT_FALSE(s.count({"double", "*="}));
}

TEST(Skeleton, ForLoopAndTernary)
{
    FunctionIR f = parse_one("int g(int n) { int s = 0; for (int i = 0; i < n; i++) s += i > 2 ? i : 0; return s; }");
    EXPECT_EQ(to_bracket_string(extract_skeleton_tree(f, false)), "Seq(Loop)");
    EXPECT_EQ(to_bracket_string(extract_skeleton_tree(f, true)), "Seq(Loop(Seq(<, ++, ?:, >)))");
    FunctionIR flat = parse_one("int h(int a) { return a * 2; }");
    EXPECT_TRUE(extract_skeleton_tree(flat, false).empty());
}

TEST(Literals, StringsAndNegativeNumbers)
{
    FunctionIR f = parse_one("int g(void) { puts(\"hi\"); return -0 + -7 + 0x10; }");
    EXPECT_EQ(extract_token_set(f, TokenSetKind::StringLiterals), (TermSet{"hi"}));
    EXPECT_EQ(extract_token_set(f, TokenSetKind::NumericLiterals), (TermSet{"0", "-7", "16"}));
}

TEST(MinimalFunction, MostSlotsEmpty)
{
    FunctionIR f = parse_one("/* leading words */\nint f(){return 0;}\n/* trailing */\n");
    EXPECT_EQ(f.comments, words({"leading words"}));
    FeatureVector fv = extract_feature_vector(f, nl(), IdfTable{}, CorpusIndex{});
    EXPECT_EQ(fv.get<TermSet>(FeatureClass::NumericLiterals), (TermSet{"0"}));
    EXPECT_EQ(fv.get<TypeMultiset>(FeatureClass::TypeSignature), (TypeMultiset{{"int", 1}}));
    for (FeatureClass c : {FeatureClass::SkeletonTree, FeatureClass::DecoratedSkeletonTree, FeatureClass::Cfg3Bfs,
                           FeatureClass::Cfg4Bfs, FeatureClass::Cfg3Dfs, FeatureClass::Cfg4Dfs}) {
        EXPECT_TRUE(is_empty(fv[c])) << to_string(c);
    }
}
