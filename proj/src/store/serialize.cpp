#include "codesift/store/serialize.hpp"

#include "codesift/core/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace codesift::store {

using nlohmann::json;

namespace {

json tree_to_json(const TreeNode& n)
{
    json children = json::array();
    for (const auto& c : n.children) {
        children.push_back(tree_to_json(c));
    }
    return json::array({n.label, std::move(children)});
}

TreeNode tree_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_array()) {
        throw FormatError("tree node must be [label, [children...]]");
    }
    TreeNode n;
    n.label = j[0].get<std::string>();
    for (const auto& c : j[1]) {
        n.children.push_back(tree_from_json(c));
    }
    return n;
}

std::uint32_t count_from_json(const json& v)
{
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 || v.get<std::uint64_t>() > UINT32_MAX) {
        throw FormatError("multiset counts must be positive integers");
    }
    return v.get<std::uint32_t>();
}

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

template <typename T>
T field(const json& j, const char* key)
{
    try {
        return require(j, key).get<T>();
    } catch (const json::type_error&) {
        throw FormatError(std::string("field \"") + key + "\" has the wrong type");
    }
}

} // namespace

json observation_to_json(const FeatureObservation& obs)
{
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, TermSet>) {
                return json(std::vector<std::string>(x.begin(), x.end()));
            } else if constexpr (std::is_same_v<T, PairSet>) {
                json arr = json::array();
                for (const auto& [a, b] : x) {
                    arr.push_back(json::array({a, b}));
                }
                return arr;
            } else if constexpr (std::is_same_v<T, ShapeMultiset>) {
                json obj = json::object();
                for (const auto& [k, n] : x) {
                    obj[std::to_string(k)] = n;
                }
                return obj;
            } else if constexpr (std::is_same_v<T, LabeledTree>) {
                return x.root ? tree_to_json(*x.root) : json(nullptr);
            } else {
                json obj = json::object();
                for (const auto& [k, n] : x) {
                    obj[k] = n;
                }
                return obj;
            }
        },
        obs);
}

FeatureObservation observation_from_json(const json& j, ObservationKind kind)
{
    switch (kind) {
    case ObservationKind::TermSet: {
        if (!j.is_array()) {
            throw FormatError("term set must be an array");
        }
        TermSet s;
        for (const auto& e : j) {
            if (!e.is_string()) {
                throw FormatError("term set elements must be strings");
            }
            s.insert(e.get<std::string>());
        }
        return s;
    }
    case ObservationKind::PairSet: {
        if (!j.is_array()) {
            throw FormatError("pair set must be an array");
        }
        PairSet s;
        for (const auto& e : j) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
                throw FormatError("pair set elements must be [string, string]");
            }
            s.emplace(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return s;
    }
    case ObservationKind::ShapeMultiset: {
        if (!j.is_object()) {
            throw FormatError("shape multiset must be an object");
        }
        ShapeMultiset m;
        for (const auto& [k, v] : j.items()) {
            std::uint64_t code = 0;
            auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), code);
            if (ec != std::errc{} || ptr != k.data() + k.size()) {
                throw FormatError("shape multiset keys must be non-negative integers");
            }
            m[code] = count_from_json(v);
        }
        return m;
    }
    case ObservationKind::TypeMultiset: {
        if (!j.is_object()) {
            throw FormatError("type multiset must be an object");
        }
        TypeMultiset m;
        for (const auto& [k, v] : j.items()) {
            m[k] = count_from_json(v);
        }
        return m;
    }
    case ObservationKind::LabeledTree: {
        LabeledTree t;
        if (!j.is_null()) {
            t.root = tree_from_json(j);
        }
        return t;
    }
    case ObservationKind::WeightedTermMap: {
        if (!j.is_object()) {
            throw FormatError("weighted term map must be an object");
        }
        WeightedTermMap m;
        for (const auto& [k, v] : j.items()) {
            if (!v.is_number() || !std::isfinite(v.get<double>()) || v.get<double>() < 0.0) {
                throw FormatError("term scores must be non-negative numbers");
            }
            m[k] = v.get<double>();
        }
        return m;
    }
    }
    throw FormatError("unknown observation kind");
}

json feature_vector_to_json(const FeatureVector& fv)
{
    json j = json::object();
    for (FeatureClass c : kAllFeatureClasses) {
        j[std::string(to_string(c))] = observation_to_json(fv[c]);
    }
    return j;
}

FeatureVector feature_vector_from_json(const json& j)
{
    if (!j.is_object()) {
        throw FormatError("feature vector must be an object");
    }
    FeatureVector fv;
    for (const auto& [key, value] : j.items()) {
        auto c = parse_feature_class(key);
        if (!c) {
            throw FormatError("unknown feature-class '" + key + "'");
        }
        fv.set(*c, observation_from_json(value, kind_of(*c)));
    }
    return fv;
}

json record_to_json(const FunctionRecord& rec)
{
    json j = {
        {"id", rec.id},
        {"name", rec.name},
        {"path", rec.path},
        {"line", rec.line},
        {"project_id", rec.project_id},
        {"distractor", rec.distractor},
        {"features", feature_vector_to_json(rec.features)},
    };
    if (!rec.source_text.empty()) {
        j["source_text"] = rec.source_text;
    }
    return j;
}

FunctionRecord record_from_json(const json& j)
{
    std::string id;
    if (j.is_object() && j.contains("id") && j.at("id").is_string()) {
        id = j.at("id").get<std::string>();
    }
    try {
        FunctionRecord rec;
        rec.id = field<std::string>(j, "id");
        rec.name = field<std::string>(j, "name");
        rec.path = field<std::string>(j, "path");
        rec.line = field<std::size_t>(j, "line");
        rec.project_id = field<std::string>(j, "project_id");
        rec.distractor = j.value("distractor", false);
        rec.features = feature_vector_from_json(require(j, "features"));
        rec.source_text = j.value("source_text", std::string());
        return rec;
    } catch (const FormatError& e) {
        throw FormatError(e.what(), id.empty() ? "?" : id);
    } catch (const KindMismatch& e) {
        throw FormatError(e.what(), id.empty() ? "?" : id);
    } catch (const json::exception& e) {
        throw FormatError(e.what(), id.empty() ? "?" : id);
    }
}

json database_to_json(const CodeDatabase& db)
{
    json idf = json::object();
    for (const auto& [project, table] : db.idf) {
        idf[project] = {{"n", table.doc_count}, {"df", table.df}};
    }
    json defined = json::object();
    for (const auto& [name, dirs] : db.corpus.defined_functions) {
        defined[name] = std::vector<std::string>(dirs.begin(), dirs.end());
    }
    json functions = json::array();
    for (const auto& [id, rec] : db.records()) {
        functions.push_back(record_to_json(rec));
    }
    return {
        {"format_version", kFormatVersion},
        {"meta",
         {{"extractor_version", db.meta.extractor_version},
          {"manifest_digest", db.meta.manifest_digest},
          {"corpus_root", db.meta.corpus_root}}},
        {"idf", std::move(idf)},
        {"corpus", {{"defined_functions", std::move(defined)}}},
        {"functions", std::move(functions)},
    };
}

CodeDatabase database_from_json(const json& j, std::string_view expected_extractor_version)
{
    if (!j.is_object()) {
        throw FormatError("database must be a JSON object");
    }
    if (field<int>(j, "format_version") != kFormatVersion) {
        throw FormatError("unsupported database format_version " + require(j, "format_version").dump());
    }
    CodeDatabase db;
    const json& meta = require(j, "meta");
    db.meta.extractor_version = field<std::string>(meta, "extractor_version");
    db.meta.manifest_digest = meta.value("manifest_digest", std::string());
    db.meta.corpus_root = meta.value("corpus_root", std::string());
    if (!expected_extractor_version.empty() && db.meta.extractor_version != expected_extractor_version) {
        throw VersionMismatch("database was built by extractor '" + db.meta.extractor_version +
                              "' but this build runs '" + std::string(expected_extractor_version) +
                              "'; re-index the corpus");
    }
    if (j.contains("idf")) {
        for (const auto& [project, t] : j.at("idf").items()) {
            features::IdfTable table;
            table.project_id = project;
            table.doc_count = field<std::size_t>(t, "n");
            try {
                table.df = require(t, "df").get<std::map<std::string, std::size_t>>();
            } catch (const json::exception&) {
                throw FormatError("idf table '" + project + "' is malformed");
            }
            db.idf.emplace(project, std::move(table));
        }
    }
    if (j.contains("corpus")) {
        const json& defined = require(j.at("corpus"), "defined_functions");
        for (const auto& [name, dirs] : defined.items()) {
            if (!dirs.is_array()) {
                throw FormatError("defined_functions entries must be arrays");
            }
            for (const auto& d : dirs) {
                db.corpus.add_definition(name, d.get<std::string>());
            }
        }
    }
    const json& functions = require(j, "functions");
    if (!functions.is_array()) {
        throw FormatError("\"functions\" must be an array");
    }
    for (const auto& f : functions) {
        FunctionRecord rec = record_from_json(f);
        std::string id = rec.id;
        try {
            db.insert(std::move(rec));
        } catch (const DuplicateId&) {
            throw FormatError("duplicate record", id);
        }
    }
    return db;
}

void save_database(const CodeDatabase& db, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << database_to_json(db).dump() << '\n';
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

CodeDatabase load_database(const std::filesystem::path& path, std::string_view expected_extractor_version)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    json j;
    try {
        j = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    return database_from_json(j, expected_extractor_version);
}

} // namespace codesift::store
