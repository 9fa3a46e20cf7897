#pragma once

#include "codesift/core/observation.hpp"
#include "codesift/features/corpus_index.hpp"
#include "codesift/features/idf.hpp"
#include "codesift/store/compact.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace codesift::store {

struct FunctionRecord
{
    std::string id;
    std::string name;
    std::string path;
    std::size_t line = 1;
    std::string project_id;
    /// Drawn from a manifest entry flagged as distractor material.
    bool distractor = false;
    FeatureVector features;
    std::string source_text;

    bool operator==(const FunctionRecord&) const = default;
};

struct DatabaseMeta
{
    std::string extractor_version;
    std::string manifest_digest;
    /// Absolute corpus root at index time; lets queries from inside the corpus resolve like indexed code.
    std::string corpus_root;

    bool operator==(const DatabaseMeta&) const = default;
};

/// Function records keyed by id, plus the corpus context (IDF tables and
/// definition sites) needed to extract compatible query vectors. A compact
/// search index is built on first use and dropped on every insert.
class CodeDatabase
{
  public:
    CodeDatabase() = default;
    CodeDatabase(const CodeDatabase& other);
    CodeDatabase& operator=(const CodeDatabase& other);
    CodeDatabase(CodeDatabase&& other) noexcept;
    CodeDatabase& operator=(CodeDatabase&& other) noexcept;

    /// Throws DuplicateId if the id is already present.
    void insert(FunctionRecord rec);

    [[nodiscard]] const FunctionRecord& get(const std::string& id) const;
    [[nodiscard]] const FunctionRecord* find(const std::string& id) const;
    [[nodiscard]] bool contains(const std::string& id) const { return records_.count(id) != 0; }
    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
    [[nodiscard]] bool empty() const noexcept { return records_.empty(); }
    [[nodiscard]] const std::map<std::string, FunctionRecord>& records() const noexcept { return records_; }

    [[nodiscard]] const SearchIndex& index() const;

    /// Digest over metadata and record ids; keys the threshold sidecar.
    [[nodiscard]] std::string digest() const;

    DatabaseMeta meta;
    features::IdfTables idf;
    /// Definition directories only; modeled names come from the data directory.
    features::CorpusIndex corpus;

    bool operator==(const CodeDatabase& other) const
    {
        return meta == other.meta && idf == other.idf && corpus == other.corpus && records_ == other.records_;
    }

  private:
    std::map<std::string, FunctionRecord> records_;
    mutable std::mutex index_mutex_;
    mutable std::shared_ptr<const SearchIndex> index_;
};

} // namespace codesift::store
