#include "codesift/core/observation.hpp"

namespace codesift {

namespace {

std::size_t count_nodes(const TreeNode& n)
{
    std::size_t total = 1;
    for (const auto& c : n.children) {
        total += count_nodes(c);
    }
    return total;
}

void preorder(const TreeNode& n, std::vector<std::string>& out)
{
    out.push_back(n.label);
    for (const auto& c : n.children) {
        preorder(c, out);
    }
}

void postorder(const TreeNode& n, std::vector<std::string>& out)
{
    for (const auto& c : n.children) {
        postorder(c, out);
    }
    out.push_back(n.label);
}

void bracket(const TreeNode& n, std::string& out)
{
    out += n.label;
    if (n.children.empty()) {
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        bracket(n.children[i], out);
    }
    out += ')';
}

} // namespace

std::size_t LabeledTree::size() const noexcept
{
    return root ? count_nodes(*root) : 0;
}

std::vector<std::string> preorder_labels(const LabeledTree& tree)
{
    std::vector<std::string> out;
    if (tree.root) {
        preorder(*tree.root, out);
    }
    return out;
}

std::vector<std::string> postorder_labels(const LabeledTree& tree)
{
    std::vector<std::string> out;
    if (tree.root) {
        postorder(*tree.root, out);
    }
    return out;
}

std::string to_bracket_string(const LabeledTree& tree)
{
    std::string out;
    if (tree.root) {
        bracket(*tree.root, out);
    }
    return out;
}

ObservationKind kind_of(const FeatureObservation& obs) noexcept
{
    return static_cast<ObservationKind>(obs.index());
}

FeatureObservation empty_observation(ObservationKind kind)
{
    switch (kind) {
    case ObservationKind::TermSet:
        return TermSet{};
    case ObservationKind::PairSet:
        return PairSet{};
    case ObservationKind::ShapeMultiset:
        return ShapeMultiset{};
    case ObservationKind::TypeMultiset:
        return TypeMultiset{};
    case ObservationKind::LabeledTree:
        return LabeledTree{};
    case ObservationKind::WeightedTermMap:
        return WeightedTermMap{};
    }
    return TermSet{};
}

bool is_empty(const FeatureObservation& obs) noexcept
{
    return std::visit(
[](const auto& v) { return v.empty(); },
        obs);
}

FeatureVector::FeatureVector()
{
    for (FeatureClass c : kAllFeatureClasses) {
        slots_[index_of(c)] = empty_observation(kind_of(c));
    }
}

void FeatureVector::set(FeatureClass c, FeatureObservation obs)
{
    if (kind_of(obs) != kind_of(c)) {
        throw KindMismatch(std::string("observation kind does not match class ") + std::string(to_string(c)));
    }
    slots_[index_of(c)] = std::move(obs);
}

} // namespace codesift
