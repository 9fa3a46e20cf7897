#include "codesift/store/indexer.hpp"

#include "codesift/core/errors.hpp"
#include "codesift/features/extract.hpp"
#include "codesift/frontend/parser.hpp"

namespace codesift::store {

namespace fs = std::filesystem;

ExtractionResources ExtractionResources::load(const fs::path& data_dir)
{
    return {features::NlPipeline::load(data_dir), features::load_modeled_functions(data_dir / "modeled_functions.json")};
}

CodeDatabase build_database(const std::vector<frontend::ManifestUnit>& units, const ExtractionResources& res,
                            const IndexOptions& opts)
{
    struct Parsed
    {
        frontend::FunctionIR ir;
        bool distractor;
    };
    std::vector<Parsed> parsed;
    for (const auto& u : units) {
        try {
            for (auto& ir : frontend::parse_unit(u.unit)) {
                parsed.push_back({std::move(ir), u.distractor});
            }
        } catch (const ParseError& e) {
            if (!opts.skip_unparseable) {
                throw;
            }
            if (opts.on_skip) {
                opts.on_skip(e);
            }
        }
    }

    CodeDatabase db;
    db.meta.extractor_version = features::kExtractorVersion;
    db.meta.manifest_digest = frontend::manifest_digest(units);
    db.corpus.modeled_names = res.modeled;
    for (const auto& p : parsed) {
        db.corpus.add_definition(p.ir.name, p.ir.directory);
        auto& table = db.idf[p.ir.project_id];
        table.project_id = p.ir.project_id;
        table.add_document(features::nl_term_set(p.ir, res.nl));
    }
    for (auto& p : parsed) {
        features::resolve_calls(p.ir, db.corpus);
        FunctionRecord rec;
        rec.id = p.ir.id;
        rec.name = p.ir.name;
        rec.path = p.ir.path;
        rec.line = p.ir.line;
        rec.project_id = p.ir.project_id;
        rec.distractor = p.distractor;
        rec.features = features::extract_feature_vector(p.ir, res.nl, db.idf.at(p.ir.project_id), db.corpus);
        if (opts.keep_source) {
            rec.source_text = p.ir.source_text;
        }
        db.insert(std::move(rec));
    }
    db.corpus.modeled_names.clear();
    return db;
}

CodeDatabase build_database(const fs::path& manifest_path, const ExtractionResources& res, const IndexOptions& opts)
{
    auto manifest = frontend::load_manifest(manifest_path);
    CodeDatabase db = build_database(frontend::read_units(manifest), res, opts);
    std::error_code ec;
    fs::path root = fs::weakly_canonical(fs::absolute(manifest.root), ec);
    db.meta.corpus_root = ec ? manifest.root.generic_string() : root.generic_string();
    return db;
}

frontend::FunctionIR parse_query_text(const std::string& text, const std::string& path, const std::string& project_id)
{
    auto fns = frontend::parse_unit({path, text, project_id});
    if (fns.size() != 1) {
        throw InvalidArgument("query file " + path + " must contain exactly one function definition, found " +
                              std::to_string(fns.size()));
    }
    return std::move(fns.front());
}

frontend::FunctionIR parse_query(const fs::path& path, const CodeDatabase& db)
{
    std::string text = frontend::read_text_file(path);
    std::string rel = path.generic_string();
    std::string project = "query";
    if (!db.meta.corpus_root.empty()) {
        std::error_code ec;
        fs::path abs = fs::weakly_canonical(fs::absolute(path), ec);
        fs::path root(db.meta.corpus_root);
        if (!ec) {
            fs::path r = abs.lexically_relative(root);
            if (!r.empty() && *r.begin() != "..") {
                rel = r.generic_string();
            }
        }
    }
    for (const auto& [id, rec] : db.records()) {
        if (rec.path == rel) {
            project = rec.project_id;
            break;
        }
    }
    return parse_query_text(text, rel, project);
}

FeatureVector query_vector(frontend::FunctionIR& ir, const CodeDatabase& db, const ExtractionResources& res)
{
    features::CorpusIndex index = db.corpus;
    index.modeled_names = res.modeled;
    if (index.defined_functions.count(ir.name) == 0) {
        index.add_definition(ir.name, ir.directory);
    }
    features::resolve_calls(ir, index);
    auto it = db.idf.find(ir.project_id);
    if (it != db.idf.end()) {
        return features::extract_feature_vector(ir, res.nl, it->second, index);
    }
    return features::extract_feature_vector(ir, res.nl, features::merge_idf(db.idf), index);
}

} // namespace codesift::store
