#include "codesift/features/extract.hpp"

#include "codesift/features/subgraph.hpp"
#include "codesift/frontend/types.hpp"

#include <map>
#include <utility>

namespace codesift::features {

using frontend::AstNode;
using frontend::FunctionIR;
using frontend::NodeKind;

namespace {

const AstNode& body_of(const FunctionIR& ir)
{
    return ir.ast.children.back();
}

std::optional<std::string> unary_op_name(const std::string& label)
{
    if (label == "-") return "unary-";
    if (label == "+") return "unary+";
    if (label == "!" || label == "~") return label;
    if (label == "++" || label == "post++") return "++";
    if (label == "--" || label == "post--") return "--";
    return std::nullopt;
}

std::optional<std::string> compound_operand_type(const AstNode& n, const std::string& op)
{
    const auto& l = n.children[0].type_of;
    const auto& r = n.children[1].type_of;
    if (l && frontend::types::is_pointer(*l)) {
        return frontend::types::decay(*l);
    }
    if (op == "<<" || op == ">>" || !r) {
        return l ? std::optional<std::string>(frontend::types::promote(*l)) : std::nullopt;
    }
    if (!l) {
        return frontend::types::promote(*r);
    }
    return frontend::types::common_type(*l, *r);
}

void collect_type_ops(const AstNode& n, PairSet& out)
{
    namespace types = frontend::types;
    switch (n.kind) {
    case NodeKind::BinaryOp:
        if (n.label != ",") {
            if (auto t = types::operand_type(n)) {
                out.emplace(*t, n.label);
            }
        }
        break;
    case NodeKind::UnaryOp:
        if (auto op = unary_op_name(n.label)) {
            if (auto t = types::operand_type(n)) {
                out.emplace(*t, *op);
            }
        }
        break;
    case NodeKind::Assignment:
        if (n.label != "=" && n.children.size() == 2) {
            std::string op = n.label.substr(0, n.label.size() - 1);
            if (auto t = compound_operand_type(n, op)) {
                out.emplace(*t, op);
            }
        }
        break;
    case NodeKind::Subscript:
        for (const auto& c : n.children) {
            if (c.type_of && types::is_pointer(*c.type_of)) {
                out.emplace(types::decay(*c.type_of), "+");
                break;
            }
        }
        break;
    case NodeKind::FieldAccess:
        if (!n.children.empty() && n.children[0].type_of) {
            const std::string& t = *n.children[0].type_of;
            if (n.label.starts_with("->")) {
                out.emplace(types::deref(t).value_or(t), n.label);
            } else {
                out.emplace(t, n.label);
            }
        }
        break;
    default:
        break;
    }
    for (const auto& c : n.children) {
        collect_type_ops(c, out);
    }
}

std::optional<std::string> decorated_label(const AstNode& n)
{
    switch (n.kind) {
    case NodeKind::BinaryOp:
        return n.label == "," ? std::nullopt : std::optional<std::string>(n.label);
    case NodeKind::UnaryOp:
        if (n.label == "-") return "negate";
        if (n.label == "*") return "deref";
        if (n.label == "+") return "unary+";
        if (n.label == "!" || n.label == "~") return n.label;
        if (n.label == "++" || n.label == "post++") return "++";
        if (n.label == "--" || n.label == "post--") return "--";
        return std::nullopt;
    case NodeKind::Ternary:
        return "?:";
    default:
        return std::nullopt;
    }
}

void skeleton_items(const AstNode& n, bool decorated, std::vector<TreeNode>& out)
{
    const bool loop = frontend::is_loop(n.kind);
    if (loop || frontend::is_conditional(n.kind)) {
        TreeNode node{loop ? "Loop" : "Cond", {}};
        TreeNode seq{"Seq", {}};
        for (const auto& c : n.children) {
            skeleton_items(c, decorated, seq.children);
        }
        if (!seq.children.empty()) {
            node.children.push_back(std::move(seq));
        }
        out.push_back(std::move(node));
        return;
    }
    if (decorated) {
        if (auto label = decorated_label(n)) {
            out.push_back(TreeNode{*label, {}});
        }
    }
    for (const auto& c : n.children) {
        skeleton_items(c, decorated, out);
    }
}

void collect_numbers(const AstNode& n, TermSet& out)
{
    if (n.kind == NodeKind::UnaryOp && n.label == "-" && n.children.size() == 1 &&
        n.children[0].kind == NodeKind::NumericLiteral) {
        const std::string& v = n.children[0].label;
        out.insert(v == "0" ? v : "-" + v);
        return;
    }
    if (n.kind == NodeKind::NumericLiteral) {
        out.insert(n.label);
    }
    for (const auto& c : n.children) {
        collect_numbers(c, out);
    }
}

void collect_strings(const AstNode& n, TermSet& out)
{
    if (n.kind == NodeKind::StringLiteral) {
        out.insert(n.label);
    }
    for (const auto& c : n.children) {
        collect_strings(c, out);
    }
}

} // namespace

PairSet extract_type_operation_coupling(const FunctionIR& ir)
{
    PairSet out;
    collect_type_ops(body_of(ir), out);
    return out;
}

LabeledTree extract_skeleton_tree(const FunctionIR& ir, bool decorated)
{
    TreeNode root{"Seq", {}};
    skeleton_items(body_of(ir), decorated, root.children);
    LabeledTree tree;
    if (!root.children.empty()) {
        tree.root = std::move(root);
    }
    return tree;
}

std::vector<RawTerm> raw_nl_terms(const FunctionIR& ir)
{
    std::vector<RawTerm> raw;
    raw.push_back({ir.name, TermOrigin::Name});
    for (const auto& p : ir.params) {
        raw.push_back({p.name, TermOrigin::Param});
    }
    for (const auto& v : ir.locals) {
        raw.push_back({v.name, TermOrigin::Local});
    }
    for (const auto& c : ir.comments) {
        raw.push_back({c, TermOrigin::Comment});
    }
    return raw;
}

std::set<std::string> nl_term_set(const FunctionIR& ir, const NlPipeline& nl)
{
    std::set<std::string> out;
    for (auto& t : nl.run(raw_nl_terms(ir))) {
        out.insert(std::move(t.term));
    }
    return out;
}

WeightedTermMap extract_weighted_nl_terms(const FunctionIR& ir, const NlPipeline& nl, const IdfTable& idf)
{
    std::map<std::string, std::pair<double, double>> tf;
    for (const auto& t : nl.run(raw_nl_terms(ir))) {
        auto& [name_tf, other_tf] = tf[t.term];
        (t.origin == TermOrigin::Name ? name_tf : other_tf) += 1.0;
    }
    WeightedTermMap out;
    for (const auto& [term, counts] : tf) {
        out[term] = (5.0 * counts.first + counts.second) * idf.idf(term);
    }
    return out;
}

TypeMultiset extract_type_signature(const FunctionIR& ir)
{
    TypeMultiset out;
    for (const auto& p : ir.params) {
        ++out[p.type];
    }
    ++out[ir.return_type];
    return out;
}

TermSet extract_token_set(const FunctionIR& ir, TokenSetKind kind)
{
    TermSet out;
    switch (kind) {
    case TokenSetKind::LocalTypes:
        for (const auto& v : ir.locals) {
            out.insert(v.type);
        }
        break;
    case TokenSetKind::NumericLiterals:
        collect_numbers(body_of(ir), out);
        break;
    case TokenSetKind::StringLiterals:
        collect_strings(body_of(ir), out);
        break;
    case TokenSetKind::CommentWords:
        for (const auto& c : ir.comments) {
            for (auto& w : split_words(c)) {
                out.insert(std::move(w));
            }
        }
        break;
    }
    return out;
}

FeatureVector extract_feature_vector(const FunctionIR& ir, const NlPipeline& nl, const IdfTable& idf,
                                     const CorpusIndex& index)
{
    FeatureVector fv;
    fv.set(FeatureClass::TypeOpCoupling, extract_type_operation_coupling(ir));
    fv.set(FeatureClass::SkeletonTree, extract_skeleton_tree(ir, false));
    fv.set(FeatureClass::DecoratedSkeletonTree, extract_skeleton_tree(ir, true));
    fv.set(FeatureClass::WeightedNlTerms, extract_weighted_nl_terms(ir, nl, idf));
    fv.set(FeatureClass::Cfg3Bfs, extract_cfg_subgraphs(ir.cfg, 3, Traversal::Bfs));
    fv.set(FeatureClass::Cfg4Bfs, extract_cfg_subgraphs(ir.cfg, 4, Traversal::Bfs));
    fv.set(FeatureClass::Cfg3Dfs, extract_cfg_subgraphs(ir.cfg, 3, Traversal::Dfs));
    fv.set(FeatureClass::Cfg4Dfs, extract_cfg_subgraphs(ir.cfg, 4, Traversal::Dfs));
    fv.set(FeatureClass::ModeledLibCalls, extract_library_calls(ir, index, LibCategory::Modeled));
    fv.set(FeatureClass::UnmodeledLibCalls, extract_library_calls(ir, index, LibCategory::Unmodeled));
    fv.set(FeatureClass::UserLibCalls, extract_library_calls(ir, index, LibCategory::UserDefined));
    fv.set(FeatureClass::TypeSignature, extract_type_signature(ir));
    fv.set(FeatureClass::LocalTypes, extract_token_set(ir, TokenSetKind::LocalTypes));
    fv.set(FeatureClass::NumericLiterals, extract_token_set(ir, TokenSetKind::NumericLiterals));
    fv.set(FeatureClass::StringLiterals, extract_token_set(ir, TokenSetKind::StringLiterals));
    fv.set(FeatureClass::Comments, extract_token_set(ir, TokenSetKind::CommentWords));
    return fv;
}

} // namespace codesift::features
