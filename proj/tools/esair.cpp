// esair: command-line front end for the stemming/indexing/retrieval pipeline.
//
// Subcommands: stem, index, search, eval, stats. Data goes to stdout,
// diagnostics to stderr; exit code 0 iff no errors.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "esair/esair.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string format_ratio(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

std::string u8(const std::u32string& s) { return esair::unicode::encode_utf8(s); }

struct CommonOptions {
    std::string lexicon_dir = "data/lexicon";
    std::string format = "table";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool wants_lexicon = true) {
    if (wants_lexicon) {
        cmd->add_option("--lexicon", opts.lexicon_dir, "Lexicon directory")
            ->envname("ESAIR_LEXICON_DIR")
            ->capture_default_str();
    }
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
}

std::vector<esair::Document> read_corpus(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw esair::Error("corpus directory not found: " + dir.string());
    }
    std::vector<esair::Document> docs;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path(), std::ios::binary);
        if (!in) throw esair::Error("cannot read " + entry.path().string());
        std::ostringstream body;
        body << in.rdbuf();
        docs.push_back(esair::Document{entry.path().stem().string(), body.str()});
    }
    if (docs.empty()) throw esair::Error("no .txt documents under " + dir.string());
    std::sort(docs.begin(), docs.end(),
              [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
    for (std::size_t i = 1; i < docs.size(); ++i) {
        if (docs[i].doc_id == docs[i - 1].doc_id) {
            throw esair::DuplicateDocIdError(docs[i].doc_id);
        }
    }
    return docs;
}

fs::path verbatim_sibling(const fs::path& index_path) {
    fs::path p = index_path;
    p += ".verbatim";
    return p;
}

int run_stem(const CommonOptions& opts, const std::vector<std::string>& words) {
    const auto lex = esair::load_lexicon(fs::path(opts.lexicon_dir));
    std::string input;
    if (words.empty()) {
        std::ostringstream all;
        all << std::cin.rdbuf();
        input = all.str();
    } else {
        for (const auto& w : words) {
            input += w;
            input += '\n';
        }
    }
    for (const auto& token : esair::tokenize(esair::normalize_text(input))) {
        const auto result = esair::stem(token.surface, lex);
        const auto& seg = result.segmentation;
        if (opts.format == "json") {
            ordered_json record{
                {"surface", u8(result.surface)},
                {"proclitic", u8(seg.proclitic)},
                {"prefix", u8(seg.prefix)},
                {"base", u8(seg.base2)},
                {"suffix", u8(seg.suffix)},
                {"enclitic", u8(seg.enclitic)},
                {"template", result.matched_template ? u8(result.matched_template->pattern)
                                                     : std::string()},
                {"root", u8(result.root)},
                {"validated", result.validated},
                {"fallback", result.fallback},
            };
            std::cout << record.dump() << '\n';
        } else {
            std::cout << u8(result.surface) << '\t' << u8(seg.proclitic) << '|' << u8(seg.prefix)
                      << '|' << u8(seg.base2) << '|' << u8(seg.suffix) << '|' << u8(seg.enclitic)
                      << '\t'
                      << (result.matched_template ? u8(result.matched_template->pattern) : "-")
                      << '\t' << u8(result.root) << '\t'
                      << (result.validated ? "valid" : result.fallback ? "fallback" : "-")
                      << '\n';
        }
    }
    return 0;
}

void print_doc_stats(const esair::InvertedIndex& index, const std::string& doc_id,
                     const std::string& format) {
    const auto& stats = index.doc_stats.at(doc_id);
    const auto ratios = esair::reduction_stats(index, doc_id);
    if (format == "json") {
        ordered_json record{
            {"doc_id", doc_id},
            {"tokens", stats.token_count},
            {"content_tokens", stats.content_token_count},
            {"distinct_stems", stats.distinct_stem_count},
            {"stop_word_ratio", ratios.stop_word_ratio},
            {"index_ratio", ratios.index_ratio},
        };
        std::cout << record.dump() << '\n';
    } else {
        std::cout << doc_id << '\t' << stats.token_count << '\t' << stats.content_token_count
                  << '\t' << stats.distinct_stem_count << '\t'
                  << format_ratio(ratios.stop_word_ratio) << '\t'
                  << format_ratio(ratios.index_ratio) << '\n';
    }
}

int run_index(const CommonOptions& opts, const std::string& corpus_dir,
              const std::string& index_path, unsigned threads) {
    const auto lex = esair::load_lexicon(fs::path(opts.lexicon_dir));
    const auto docs = read_corpus(corpus_dir);
    const auto index = esair::build_index(docs, lex, threads);
    const auto surface_index = esair::build_verbatim_index(docs, lex, threads);
    esair::write_index(index, fs::path(index_path));
    esair::write_index(surface_index, verbatim_sibling(index_path));

    if (opts.format == "table") {
        std::cout << "doc_id\ttokens\tcontent\tdistinct\tstop_ratio\tindex_ratio\n";
    }
    std::size_t tokens = 0, content = 0;
    for (const auto& [doc_id, stats] : index.doc_stats) {
        print_doc_stats(index, doc_id, opts.format);
        tokens += stats.token_count;
        content += stats.content_token_count;
    }
    const double stop_ratio = tokens ? static_cast<double>(content) / tokens : 0.0;
    const double index_ratio =
        tokens ? static_cast<double>(index.postings.size()) / tokens : 0.0;
    if (opts.format == "json") {
        ordered_json total{
            {"docs", index.doc_stats.size()},
            {"tokens", tokens},
            {"content_tokens", content},
            {"distinct_stems", index.postings.size()},
            {"stop_word_ratio", stop_ratio},
            {"index_ratio", index_ratio},
        };
        std::cout << total.dump() << '\n';
    } else {
        std::cout << "total\t" << tokens << '\t' << content << '\t' << index.postings.size()
                  << '\t' << format_ratio(stop_ratio) << '\t' << format_ratio(index_ratio)
                  << '\n';
    }
    return 0;
}

int run_search(const CommonOptions& opts, const std::string& index_path,
               const std::string& query_text, std::size_t k, bool no_stem) {
    const auto lex = esair::load_lexicon(fs::path(opts.lexicon_dir));
    const fs::path path = no_stem ? verbatim_sibling(index_path) : fs::path(index_path);
    const auto index = esair::read_index(path);
    const auto query = no_stem ? esair::process_query_verbatim(query_text, lex)
                               : esair::process_query(query_text, lex);
    const auto results = esair::search(index, query, k);
    for (const auto& r : results) {
        if (opts.format == "json") {
            ordered_json record{
                {"doc_id", r.doc_id},
                {"rank", r.rank},
                {"matched_stems", r.matched_stems},
                {"score", r.score},
            };
            std::cout << record.dump() << '\n';
        } else {
            std::cout << r.rank << '\t' << r.doc_id << '\t' << r.matched_stems << '\t' << r.score
                      << '\n';
        }
    }
    return 0;
}

std::vector<std::pair<std::string, std::string>> load_queries(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw esair::MissingFileError(path.string());
    std::vector<std::pair<std::string, std::string>> queries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw esair::MalformedLineError(path.string(), line_no,
                                            "expected query_id<TAB>query text");
        }
        queries.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return queries;
}

int run_eval(const CommonOptions& opts, const std::string& index_path,
             const std::string& queries_path, const std::string& qrels_path,
             const std::string& gold_path, std::size_t k, bool no_stem) {
    const auto lex = esair::load_lexicon(fs::path(opts.lexicon_dir));
    const fs::path path = no_stem ? verbatim_sibling(index_path) : fs::path(index_path);
    const auto index = esair::read_index(path);
    const auto queries = load_queries(queries_path);
    const auto qrels = esair::load_qrels(qrels_path);

    std::vector<esair::EvalMetrics> per_query;
    std::vector<std::array<double, 11>> curves;
    ordered_json query_rows = ordered_json::array();
    std::ostringstream table;
    table << "query_id\tprecision\trecall\tsilence\tretrieved\trelevant\trel_ret\n";

    for (const auto& [query_id, text] : queries) {
        auto rel = qrels.find(query_id);
        if (rel == qrels.end()) {
            std::cerr << "esair: no relevance judgments for query " << query_id << ", skipped\n";
            continue;
        }
        std::vector<esair::SearchResult> results;
        try {
            const auto query = no_stem ? esair::process_query_verbatim(text, lex)
                                       : esair::process_query(text, lex);
            results = esair::search(index, query, k);
        } catch (const esair::EmptyQueryError&) {
            std::cerr << "esair: query " << query_id << " has no indexable terms\n";
        }
        const auto metrics = esair::eval_query(results, rel->second);
        const auto curve = esair::eleven_point_precision(results, rel->second);
        per_query.push_back(metrics);
        curves.push_back(curve);
        query_rows.push_back(ordered_json{
            {"query_id", query_id},
            {"precision", metrics.precision},
            {"recall", metrics.recall},
            {"silence", metrics.silence},
            {"retrieved", metrics.retrieved},
            {"relevant", metrics.relevant},
            {"relevant_retrieved", metrics.relevant_retrieved},
            {"eleven_point", curve},
        });
        table << query_id << '\t' << format_ratio(metrics.precision) << '\t'
              << format_ratio(metrics.recall) << '\t' << format_ratio(metrics.silence) << '\t'
              << metrics.retrieved << '\t' << metrics.relevant << '\t'
              << metrics.relevant_retrieved << '\n';
    }
    if (per_query.empty()) throw esair::Error("no evaluable queries");

    const auto macro = esair::macro_average(per_query);
    std::array<double, 11> mean_curve{};
    for (const auto& curve : curves) {
        for (std::size_t i = 0; i < curve.size(); ++i) mean_curve[i] += curve[i];
    }
    for (auto& v : mean_curve) v /= static_cast<double>(curves.size());

    std::optional<esair::StemAccuracy> accuracy;
    if (!gold_path.empty()) {
        const auto gold = esair::load_gold_roots(gold_path);
        std::vector<std::pair<std::u32string, std::u32string>> predictions;
        predictions.reserve(gold.size());
        for (const auto& [word, root] : gold) {
            (void)root;
            predictions.emplace_back(word, esair::stem(word, lex).root);
        }
        accuracy = esair::stem_accuracy(predictions, gold);
    }

    if (opts.format == "json") {
        ordered_json out{
            {"mode", no_stem ? "verbatim" : "stemmed"},
            {"queries", query_rows},
            {"macro",
             ordered_json{{"precision", macro.precision},
                          {"recall", macro.recall},
                          {"silence", macro.silence},
                          {"retrieved", macro.retrieved},
                          {"relevant", macro.relevant},
                          {"relevant_retrieved", macro.relevant_retrieved}}},
            {"mean_eleven_point", mean_curve},
        };
        if (accuracy) {
            out["stem_accuracy"] = ordered_json{{"correct", accuracy->correct},
                                                {"total_valid", accuracy->total_valid},
                                                {"accuracy", accuracy->accuracy}};
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "mode: " << (no_stem ? "verbatim" : "stemmed") << '\n';
        std::cout << table.str();
        std::cout << "macro\t" << format_ratio(macro.precision) << '\t'
                  << format_ratio(macro.recall) << '\t' << format_ratio(macro.silence) << '\t'
                  << macro.retrieved << '\t' << macro.relevant << '\t'
                  << macro.relevant_retrieved << '\n';
        std::cout << "recall_level";
        for (std::size_t i = 0; i <= 10; ++i) std::cout << '\t' << format_ratio(0.1 * i);
        std::cout << "\nmean_precision";
        for (double v : mean_curve) std::cout << '\t' << format_ratio(v);
        std::cout << '\n';
        if (accuracy) {
            std::cout << "stem_accuracy\t" << accuracy->correct << '/' << accuracy->total_valid
                      << '\t' << format_ratio(accuracy->accuracy) << '\n';
        }
    }
    return 0;
}

int run_stats(const CommonOptions& opts, const std::string& index_path, const std::string& doc) {
    const auto index = esair::read_index(fs::path(index_path));
    if (opts.format == "table") {
        std::cout << "doc_id\ttokens\tcontent\tdistinct\tstop_ratio\tindex_ratio\n";
    }
    if (!doc.empty()) {
        if (!index.doc_stats.count(doc)) throw esair::UnknownDocError(doc);
        print_doc_stats(index, doc, opts.format);
        return 0;
    }
    for (const auto& [doc_id, stats] : index.doc_stats) {
        (void)stats;
        print_doc_stats(index, doc_id, opts.format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ESAIR Arabic stemming, indexing and retrieval"};
    app.require_subcommand(1);

    CommonOptions stem_opts;
    std::vector<std::string> stem_words;
    auto* stem_cmd = app.add_subcommand("stem", "Stem words (arguments or stdin)");
    add_common(stem_cmd, stem_opts);
    stem_cmd->add_option("words", stem_words, "Words to stem; stdin when omitted");

    CommonOptions index_opts;
    std::string corpus_dir;
    std::string index_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* index_cmd = app.add_subcommand("index", "Build the inverted index from a corpus");
    add_common(index_cmd, index_opts);
    index_cmd->add_option("--corpus", corpus_dir, "Directory of UTF-8 .txt documents")
        ->envname("ESAIR_CORPUS_DIR")
        ->required();
    index_cmd->add_option("--index", index_path, "Output index file")
        ->envname("ESAIR_INDEX_FILE")
        ->required();
    index_cmd->add_option("--threads", threads, "Analysis worker count")->capture_default_str();

    CommonOptions search_opts;
    std::string search_index;
    std::string query_text;
    std::size_t search_k = 10;
    bool search_no_stem = false;
    auto* search_cmd = app.add_subcommand("search", "Run a query against an index");
    add_common(search_cmd, search_opts);
    search_cmd->add_option("--index", search_index, "Index file")
        ->envname("ESAIR_INDEX_FILE")
        ->required();
    search_cmd->add_option("--k", search_k, "Maximum results")->capture_default_str();
    search_cmd->add_flag("--no-stem", search_no_stem, "Verbatim (surface form) matching");
    search_cmd->add_option("query", query_text, "Query text")->required();

    CommonOptions eval_opts;
    std::string eval_index, eval_queries, eval_qrels, eval_gold;
    std::size_t eval_k = 0;  // 0 = unlimited
    bool eval_no_stem = false;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate queries against relevance judgments");
    add_common(eval_cmd, eval_opts);
    eval_cmd->add_option("--index", eval_index, "Index file")
        ->envname("ESAIR_INDEX_FILE")
        ->required();
    eval_cmd->add_option("--queries", eval_queries, "query_id<TAB>text file")->required();
    eval_cmd->add_option("--qrels", eval_qrels, "query_id<TAB>doc_id file")->required();
    eval_cmd->add_option("--gold-roots", eval_gold, "word<TAB>root file for stem accuracy");
    eval_cmd->add_option("--k", eval_k, "Result cutoff (0 = all matches)")
        ->capture_default_str();
    eval_cmd->add_flag("--no-stem", eval_no_stem, "Verbatim matching baseline");

    CommonOptions stats_opts;
    std::string stats_index, stats_doc;
    auto* stats_cmd = app.add_subcommand("stats", "Reduction statistics from an index file");
    add_common(stats_cmd, stats_opts, /*wants_lexicon=*/false);
    stats_cmd->add_option("--index", stats_index, "Index file")
        ->envname("ESAIR_INDEX_FILE")
        ->required();
    stats_cmd->add_option("--doc", stats_doc, "Restrict to one document id");

    CLI11_PARSE(app, argc, argv);

    try {
        if (stem_cmd->parsed()) return run_stem(stem_opts, stem_words);
        if (index_cmd->parsed()) return run_index(index_opts, corpus_dir, index_path, threads);
        if (search_cmd->parsed()) {
            return run_search(search_opts, search_index, query_text, search_k, search_no_stem);
        }
        if (eval_cmd->parsed()) {
            return run_eval(eval_opts, eval_index, eval_queries, eval_qrels, eval_gold,
                            eval_k == 0 ? std::numeric_limits<std::size_t>::max() : eval_k,
                            eval_no_stem);
        }
        if (stats_cmd->parsed()) return run_stats(stats_opts, stats_index, stats_doc);
    } catch (const std::exception& e) {
        std::cerr << "esair: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
