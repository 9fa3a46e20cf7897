#include "codesift/features/nl.hpp"

#include "codesift/core/errors.hpp"
#include "codesift/features/porter.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>

namespace codesift::features {

namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

} // namespace

std::vector<std::string> split_identifier(std::string_view text)
{
    std::vector<std::string> parts;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            parts.push_back(std::move(cur));
            cur.clear();
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (!is_alpha(c)) {
            flush();
            continue;
        }
        if (is_upper(c) && !cur.empty()) {
            bool prev_lower = is_lower(cur.back());
            bool next_lower = i + 1 < text.size() && is_lower(text[i + 1]);
            if (prev_lower || (is_upper(cur.back()) && next_lower)) {
                flush();
            }
        }
        cur += c;
    }
    flush();
    return parts;
}

std::vector<std::string> split_words(std::string_view text)
{
    std::vector<std::string> words;
    std::string cur;
    for (char c : text) {
        if (is_alnum(c)) {
            cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!cur.empty()) {
            words.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) {
        words.push_back(std::move(cur));
    }
    return words;
}

std::vector<std::string> greedy_split(const std::string& word, const std::set<std::string>& dictionary)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < word.size()) {
        std::size_t best = 0;
        for (std::size_t len = word.size() - pos; len >= 2; --len) {
            if (dictionary.count(word.substr(pos, len)) != 0) {
                best = len;
                break;
            }
        }
        if (best == 0) {
            return {word};
        }
        out.push_back(word.substr(pos, best));
        pos += best;
    }
    return out;
}

NlPipeline::NlPipeline(std::set<std::string> dictionary, std::set<std::string> stop_words)
    : dictionary_(std::move(dictionary)), stop_words_(std::move(stop_words))
{
}

NlPipeline NlPipeline::load(const std::filesystem::path& data_dir)
{
    auto stop = load_word_list(data_dir / "stopwords_en.txt");
    auto code = load_word_list(data_dir / "stopwords_code.txt");
    stop.insert(code.begin(), code.end());
    return NlPipeline(load_word_list(data_dir / "dictionary.txt"), std::move(stop));
}

const NlPipeline& NlPipeline::shared()
{
    static const NlPipeline pipeline = load(default_data_dir());
    return pipeline;
}

std::vector<std::string> NlPipeline::process(std::string_view text) const
{
    std::vector<std::string> out;
    for (const auto& piece : split_identifier(text)) {
        for (const auto& word : greedy_split(lower(piece), dictionary_)) {
            if (word.size() < 2 || stop_words_.count(word) != 0) {
                continue;
            }
            std::string stem = porter_stem(word);
            if (stem.size() < 2 || stop_words_.count(stem) != 0) {
                continue;
            }
            out.push_back(std::move(stem));
        }
    }
    return out;
}

std::vector<ProcessedTerm> NlPipeline::run(const std::vector<RawTerm>& raw) const
{
    std::vector<ProcessedTerm> out;
    for (const auto& r : raw) {
        for (auto& t : process(r.text)) {
            out.push_back({std::move(t), r.origin});
        }
    }
    return out;
}

std::set<std::string> load_word_list(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read word list " + path.string());
    }
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())) != 0) {
            line.pop_back();
        }
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        words.insert(lower(line.substr(start)));
    }
    return words;
}

std::filesystem::path default_data_dir()
{
    if (const char* env = std::getenv("CODESIFT_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return CODESIFT_DEFAULT_DATA_DIR;
}

} // namespace codesift::features
