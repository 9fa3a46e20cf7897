#include "codesift/eval/metrics.hpp"

#include <algorithm>

namespace codesift::eval {

double average_precision(const std::vector<std::string>& ranked, const std::set<std::string>& relevant)
{
    if (relevant.empty()) {
        throw EmptyRelevantSet();
    }
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (relevant.count(ranked[i]) != 0) {
            ranks.push_back(i + 1);
        }
    }
    return average_precision_from_ranks(std::move(ranks), relevant.size());
}

double average_precision_from_ranks(std::vector<std::size_t> ranks, std::size_t relevant_count)
{
    if (relevant_count == 0) {
        throw EmptyRelevantSet();
    }
    std::sort(ranks.begin(), ranks.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        sum += static_cast<double>(i + 1) / static_cast<double>(ranks[i]);
    }
    return sum / static_cast<double>(relevant_count);
}

double mean_average_precision(const std::vector<double>& aps)
{
    if (aps.empty()) {
        throw InvalidArgument("mean average precision over zero queries");
    }
    double sum = 0.0;
    for (double a : aps) {
        sum += a;
    }
    return sum / static_cast<double>(aps.size());
}

} // namespace codesift::eval
