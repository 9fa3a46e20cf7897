#include "codesift/features/idf.hpp"

#include <algorithm>
#include <cmath>

namespace codesift::features {

void IdfTable::add_document(const std::set<std::string>& terms)
{
    ++doc_count;
    for (const auto& t : terms) {
        ++df[t];
    }
}

double IdfTable::idf(const std::string& term) const
{
    auto it = df.find(term);
    double d = it == df.end() ? 1.0 : static_cast<double>(it->second);
    double n = static_cast<double>(std::max<std::size_t>(doc_count, 1));
    return std::log(1.0 + n / d);
}

IdfTable merge_idf(const IdfTables& tables, const std::string& project_id)
{
    IdfTable merged;
    merged.project_id = project_id;
    for (const auto& [name, t] : tables) {
        merged.doc_count += t.doc_count;
        for (const auto& [term, count] : t.df) {
            merged.df[term] += count;
        }
    }
    return merged;
}

} // namespace codesift::features
