#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>

namespace codesift::features {

/// Document frequencies of processed NL terms over one project's functions.
struct IdfTable
{
    std::string project_id;
    std::size_t doc_count = 0;
    std::map<std::string, std::size_t> df;

    /// Counts one function whose processed terms are `terms`.
    void add_document(const std::set<std::string>& terms);

    /// ln(1 + N/df); terms never seen are treated as df = 1. N is at least 1.
    [[nodiscard]] double idf(const std::string& term) const;

    bool operator==(const IdfTable&) const = default;
};

using IdfTables = std::map<std::string, IdfTable>;

/// Sum of every project's counts, used for ad-hoc queries that belong to no project.
[[nodiscard]] IdfTable merge_idf(const IdfTables& tables, const std::string& project_id = "*");

} // namespace codesift::features
