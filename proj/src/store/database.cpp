#include "codesift/store/database.hpp"

#include "codesift/core/errors.hpp"
#include "codesift/core/hash.hpp"

namespace codesift::store {

CodeDatabase::CodeDatabase(const CodeDatabase& other)
    : meta(other.meta), idf(other.idf), corpus(other.corpus), records_(other.records_)
{
}

CodeDatabase& CodeDatabase::operator=(const CodeDatabase& other)
{
    if (this != &other) {
        meta = other.meta;
        idf = other.idf;
        corpus = other.corpus;
        records_ = other.records_;
        std::lock_guard lock(index_mutex_);
        index_.reset();
    }
    return *this;
}

CodeDatabase::CodeDatabase(CodeDatabase&& other) noexcept
    : meta(std::move(other.meta)),
      idf(std::move(other.idf)),
      corpus(std::move(other.corpus)),
      records_(std::move(other.records_)),
      index_(std::move(other.index_))
{
}

CodeDatabase& CodeDatabase::operator=(CodeDatabase&& other) noexcept
{
    if (this != &other) {
        meta = std::move(other.meta);
        idf = std::move(other.idf);
        corpus = std::move(other.corpus);
        records_ = std::move(other.records_);
        std::lock_guard lock(index_mutex_);
        index_ = std::move(other.index_);
    }
    return *this;
}

void CodeDatabase::insert(FunctionRecord rec)
{
    std::string id = rec.id;
    if (!records_.emplace(id, std::move(rec)).second) {
        throw DuplicateId(id);
    }
    std::lock_guard lock(index_mutex_);
    index_.reset();
}

const FunctionRecord& CodeDatabase::get(const std::string& id) const
{
    const FunctionRecord* r = find(id);
    if (r == nullptr) {
        throw MissingId(id);
    }
    return *r;
}

const FunctionRecord* CodeDatabase::find(const std::string& id) const
{
    auto it = records_.find(id);
    return it == records_.end() ? nullptr : &it->second;
}

const SearchIndex& CodeDatabase::index() const
{
    std::lock_guard lock(index_mutex_);
    if (!index_) {
        SearchIndex::Builder b;
        for (const auto& [id, rec] : records_) {
            b.add(id, rec.features);
        }
        index_ = std::make_shared<const SearchIndex>(std::move(b).finish());
    }
    return *index_;
}

std::string CodeDatabase::digest() const
{
    Fnv1a h;
    h.field(meta.extractor_version).field(meta.manifest_digest).field(std::to_string(records_.size()));
    for (const auto& [id, rec] : records_) {
        h.field(id);
    }
    return h.hex();
}

} // namespace codesift::store
