#pragma once

#include "codesift/core/observation.hpp"
#include "codesift/features/corpus_index.hpp"
#include "codesift/features/idf.hpp"
#include "codesift/features/nl.hpp"
#include "codesift/frontend/function_ir.hpp"

#include <set>
#include <string>
#include <vector>

namespace codesift::features {

/// Bumped whenever any extractor's output changes; stored in every database.
inline constexpr const char* kExtractorVersion = "codesift-extract-3";

enum class TokenSetKind
{
    LocalTypes,
    NumericLiterals,
    StringLiterals,
    CommentWords,
};

/// (operand type, operator) for arithmetic, bitwise, logical and relational
/// operators, compound assignments and subscripts (as pointer "+"), plus
/// (aggregate type, ".field" / "->field") for member accesses.
[[nodiscard]] PairSet extract_type_operation_coupling(const frontend::FunctionIR& ir);

/// Loops become "Loop", if/switch become "Cond", each holding one "Seq" of
/// the items retained beneath them. With `decorated`, operator leaves are kept
/// too, except assignments, address-of, comma, sizeof, subscripts, calls,
/// member accesses and casts.
[[nodiscard]] LabeledTree extract_skeleton_tree(const frontend::FunctionIR& ir, bool decorated);

/// Identifier and comment text fed to the NL pipeline.
[[nodiscard]] std::vector<RawTerm> raw_nl_terms(const frontend::FunctionIR& ir);
/// Distinct processed terms of a function, the document for IDF counting.
[[nodiscard]] std::set<std::string> nl_term_set(const frontend::FunctionIR& ir, const NlPipeline& nl);

/// score(t) = (5 * tf_name(t) + tf_other(t)) * ln(1 + N / df(t))
[[nodiscard]] WeightedTermMap extract_weighted_nl_terms(const frontend::FunctionIR& ir, const NlPipeline& nl,
                                                        const IdfTable& idf);

/// Parameter types plus the return type.
[[nodiscard]] TypeMultiset extract_type_signature(const frontend::FunctionIR& ir);

[[nodiscard]] TermSet extract_token_set(const frontend::FunctionIR& ir, TokenSetKind kind);

[[nodiscard]] FeatureVector extract_feature_vector(const frontend::FunctionIR& ir, const NlPipeline& nl,
                                                   const IdfTable& idf, const CorpusIndex& index);

} // namespace codesift::features
