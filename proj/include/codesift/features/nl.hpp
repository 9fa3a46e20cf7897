#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace codesift::features {

enum class TermOrigin : std::uint8_t
{
    Name,
    Param,
    Local,
    Comment,
};

struct RawTerm
{
    std::string text;
    TermOrigin origin = TermOrigin::Local;
};

struct ProcessedTerm
{
    std::string term;
    TermOrigin origin = TermOrigin::Local;

    bool operator==(const ProcessedTerm&) const = default;
};

/// Splits an identifier on underscores, digits and lower-to-upper or
/// acronym-to-word case changes: "parseHTTPHeader_v2" -> {parse, HTTP, Header, v}.
[[nodiscard]] std::vector<std::string> split_identifier(std::string_view text);

/// Lower-case word tokens of free text (letters and digits).
[[nodiscard]] std::vector<std::string> split_words(std::string_view text);

/// Repeated longest dictionary prefix (words of length >= 2). Returns {word}
/// when the word cannot be covered completely.
[[nodiscard]] std::vector<std::string> greedy_split(const std::string& word, const std::set<std::string>& dictionary);

/// Identifier and comment text to stemmed terms: split, lower-case, greedy
/// dictionary split, stop-word and short-token removal, Porter stemming.
class NlPipeline
{
  public:
    NlPipeline() = default;
    NlPipeline(std::set<std::string> dictionary, std::set<std::string> stop_words);

    /// Loads dictionary.txt, stopwords_en.txt and stopwords_code.txt from `data_dir`.
    [[nodiscard]] static NlPipeline load(const std::filesystem::path& data_dir);
    /// Loads from the default data directory (see default_data_dir()).
    [[nodiscard]] static const NlPipeline& shared();

    [[nodiscard]] std::vector<std::string> process(std::string_view text) const;
    [[nodiscard]] std::vector<ProcessedTerm> run(const std::vector<RawTerm>& raw) const;

    [[nodiscard]] const std::set<std::string>& dictionary() const noexcept { return dictionary_; }
    [[nodiscard]] const std::set<std::string>& stop_words() const noexcept { return stop_words_; }

  private:
    std::set<std::string> dictionary_;
    std::set<std::string> stop_words_;
};

/// Newline-delimited word list; blank lines and lines starting with '#' are skipped.
[[nodiscard]] std::set<std::string> load_word_list(const std::filesystem::path& path);

/// $CODESIFT_DATA_DIR if set, else the directory configured at build time.
[[nodiscard]] std::filesystem::path default_data_dir();

} // namespace codesift::features
