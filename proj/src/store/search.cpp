#include "codesift/store/search.hpp"

#include "codesift/core/errors.hpp"

#include <algorithm>
#include <queue>
#include <thread>

namespace codesift::store {

namespace {

struct Hit
{
    double score;
    std::uint32_t pos;
};

/// Strict "ranks before": higher score, then lower position (= lower id).
bool better(const Hit& a, const Hit& b)
{
    return a.score > b.score || (a.score == b.score && a.pos < b.pos);
}

std::vector<Hit> scan_shard(const SearchIndex& index, const CompactVector& query, const WeightProfile& w,
                            std::size_t k, const std::vector<std::uint32_t>* candidates, std::size_t begin,
                            std::size_t end)
{
    // max-heap under `better`: the top is the worst hit kept so far
    std::priority_queue<Hit, std::vector<Hit>, decltype(&better)> heap(&better);
    for (std::size_t i = begin; i < end; ++i) {
        auto pos = candidates != nullptr ? (*candidates)[i] : static_cast<std::uint32_t>(i);
        Hit h{index.combined(query, index.vector(pos), w), pos};
        if (heap.size() < k) {
            heap.push(h);
        } else if (better(h, heap.top())) {
            heap.pop();
            heap.push(h);
        }
    }
    std::vector<Hit> out;
    out.reserve(heap.size());
    while (!heap.empty()) {
        out.push_back(heap.top());
        heap.pop();
    }
    return out;
}

} // namespace

RankedList top_k(const SearchIndex& index, const CompactVector& query, const WeightProfile& w, std::size_t k,
                 const SearchOptions& opts)
{
    if (k == 0) {
        throw InvalidArgument("k must be positive");
    }
    if (!(std::any_of(w.w.begin(), w.w.end(), [](double x) { return x > 0.0; }))) {
        throw ZeroWeightSum();
    }
    const std::size_t n = opts.candidates != nullptr ? opts.candidates->size() : index.size();
    std::size_t threads = opts.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.threads;
    threads = std::max<std::size_t>(1, std::min(threads, n / 1024 + 1));

    std::vector<std::vector<Hit>> shards(threads);
    if (threads == 1) {
        shards[0] = scan_shard(index, query, w, k, opts.candidates, 0, n);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            std::size_t b = n * t / threads;
            std::size_t e = n * (t + 1) / threads;
            pool.emplace_back([&, t, b, e] { shards[t] = scan_shard(index, query, w, k, opts.candidates, b, e); });
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    std::vector<Hit> all;
    for (auto& s : shards) {
        all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end(), better);
    if (all.size() > k) {
        all.resize(k);
    }
    RankedList list;
    list.k_requested = k;
    for (const auto& h : all) {
        list.entries.push_back({index.id(h.pos), h.score, index.similarity_vector(query, index.vector(h.pos))});
    }
    return list;
}

RankedList top_k(const CodeDatabase& db, const FeatureVector& query, const WeightProfile& w, std::size_t k,
                 const SearchOptions& opts)
{
    const SearchIndex& index = db.index();
    return top_k(index, index.compile(query), w, k, opts);
}

} // namespace codesift::store
