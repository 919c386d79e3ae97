#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "esair/errors.hpp"
#include "esair/lexicon.hpp"
#include "esair/normalize.hpp"
#include "esair/stemmer.hpp"
#include "esair/unicode.hpp"

namespace esair {

struct Document {
    std::string doc_id;
    std::string raw_text;  // UTF-8
};

struct DocStats {
    std::size_t token_count = 0;
    std::size_t content_token_count = 0;  // after stop-word removal
    std::size_t distinct_stem_count = 0;

    bool operator==(const DocStats&) const = default;
};

struct Posting {
    std::string doc_id;
    std::uint64_t term_frequency = 0;

    bool operator==(const Posting&) const = default;
};

struct InvertedIndex {
    // Posting lists sorted by doc_id, one entry per doc.
    std::map<std::u32string, std::vector<Posting>> postings;
    std::map<std::string, DocStats> doc_stats;

    bool operator==(const InvertedIndex&) const = default;
};

struct ReductionStats {
    double stop_word_ratio = 0.0;  // content tokens / raw tokens
    double index_ratio = 0.0;      // distinct stems / raw tokens
};

namespace detail {

struct DocAnalysis {
    DocStats stats;
    std::map<std::u32string, std::uint64_t> term_counts;
};

enum class IndexKeying { Stem, Surface };

inline DocAnalysis analyze_document(const Document& doc, const Lexicon& lex, IndexKeying keying) {
    DocAnalysis analysis;
    const auto tokens = tokenize(normalize_text(std::string_view(doc.raw_text)));
    analysis.stats.token_count = tokens.size();
    for (const auto& token : tokens) {
        if (lex.is_stop_word(token.surface)) continue;
        ++analysis.stats.content_token_count;
        std::u32string key = keying == IndexKeying::Stem ? stem(token.surface, lex).root
                                                         : token.surface;
        ++analysis.term_counts[std::move(key)];
    }
    analysis.stats.distinct_stem_count = analysis.term_counts.size();
    return analysis;
}

inline void check_doc_id(const std::string& doc_id) {
    if (doc_id.empty()) throw Error("empty document id");
    if (doc_id.find_first_of("\t\n\r:,") != std::string::npos) {
        throw Error("document id contains a reserved character: " + doc_id);
    }
}

inline InvertedIndex build(const std::vector<Document>& docs, const Lexicon& lex,
                           IndexKeying keying, unsigned threads) {
    std::set<std::string> ids;
    for (const auto& doc : docs) {
        check_doc_id(doc.doc_id);
        if (!ids.insert(doc.doc_id).second) throw DuplicateDocIdError(doc.doc_id);
    }

    std::vector<DocAnalysis> analyses(docs.size());
    if (threads <= 1 || docs.size() < 2) {
        for (std::size_t i = 0; i < docs.size(); ++i) {
            analyses[i] = analyze_document(docs[i], lex, keying);
        }
    } else {
        const unsigned worker_count =
            std::min<unsigned>(threads, static_cast<unsigned>(docs.size()));
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < docs.size(); i += worker_count) {
                    analyses[i] = analyze_document(docs[i], lex, keying);
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    // Single-writer merge; per-doc order does not matter because posting
    // lists are re-sorted by doc_id.
    InvertedIndex index;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        index.doc_stats.emplace(docs[i].doc_id, analyses[i].stats);
        for (const auto& [term, tf] : analyses[i].term_counts) {
            index.postings[term].push_back(Posting{docs[i].doc_id, tf});
        }
    }
    for (auto& [term, list] : index.postings) {
        (void)term;
        std::sort(list.begin(), list.end(),
                  [](const Posting& a, const Posting& b) { return a.doc_id < b.doc_id; });
    }
    return index;
}

}  // namespace detail

/// normalize -> tokenize -> stop-word filter -> stem -> post.
inline InvertedIndex build_index(const std::vector<Document>& docs, const Lexicon& lex,
                                 unsigned threads = 1) {
    return detail::build(docs, lex, detail::IndexKeying::Stem, threads);
}

/// Same pipeline without stemming; keys are normalized surface forms.
inline InvertedIndex build_verbatim_index(const std::vector<Document>& docs, const Lexicon& lex,
                                          unsigned threads = 1) {
    return detail::build(docs, lex, detail::IndexKeying::Surface, threads);
}

inline ReductionStats reduction_stats(const InvertedIndex& index, const std::string& doc_id) {
    auto it = index.doc_stats.find(doc_id);
    if (it == index.doc_stats.end()) throw UnknownDocError(doc_id);
    const DocStats& s = it->second;
    ReductionStats out;
    if (s.token_count > 0) {
        out.stop_word_ratio =
            static_cast<double>(s.content_token_count) / static_cast<double>(s.token_count);
        out.index_ratio =
            static_cast<double>(s.distinct_stem_count) / static_cast<double>(s.token_count);
    }
    return out;
}

inline constexpr std::string_view kIndexFormatHeader = "esair-index/1";

inline void write_index(const InvertedIndex& index, std::ostream& out) {
    out << kIndexFormatHeader << '\n';
    for (const auto& [doc_id, stats] : index.doc_stats) {
        out << "doc\t" << doc_id << '\t' << stats.token_count << '\t'
            << stats.content_token_count << '\t' << stats.distinct_stem_count << '\n';
    }
    for (const auto& [term, list] : index.postings) {
        out << unicode::encode_utf8(term) << '\t';
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) out << ',';
            out << list[i].doc_id << ':' << list[i].term_frequency;
        }
        out << '\n';
    }
}

inline void write_index(const InvertedIndex& index, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    write_index(index, out);
}

inline InvertedIndex read_index(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kIndexFormatHeader) {
        throw MalformedIndexError("bad or missing index header");
    }
    InvertedIndex index;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        auto fail = [&](const std::string& why) -> MalformedIndexError {
            return MalformedIndexError("index line " + std::to_string(line_no) + ": " + why);
        };
        if (fields[0] == "doc") {
            if (fields.size() != 5) throw fail("doc line needs 5 fields");
            DocStats stats;
            try {
                stats.token_count = std::stoull(fields[2]);
                stats.content_token_count = std::stoull(fields[3]);
                stats.distinct_stem_count = std::stoull(fields[4]);
            } catch (const std::exception&) {
                throw fail("doc counters are not numbers");
            }
            if (!index.doc_stats.emplace(fields[1], stats).second) {
                throw fail("duplicate doc id " + fields[1]);
            }
            continue;
        }
        if (fields.size() != 2) throw fail("posting line needs 2 fields");
        const std::u32string term = unicode::decode_utf8(fields[0]);
        std::vector<Posting>& list = index.postings[term];
        if (!list.empty()) throw fail("duplicate term");
        std::istringstream entries(fields[1]);
        std::string entry;
        while (std::getline(entries, entry, ',')) {
            const auto colon = entry.rfind(':');
            if (colon == std::string::npos) throw fail("posting entry lacks ':'");
            Posting p;
            p.doc_id = entry.substr(0, colon);
            try {
                p.term_frequency = std::stoull(entry.substr(colon + 1));
            } catch (const std::exception&) {
                throw fail("term frequency is not a number");
            }
            if (p.term_frequency == 0) throw fail("zero term frequency");
            if (!list.empty() && list.back().doc_id >= p.doc_id) {
                throw fail("postings not sorted by doc id");
            }
            list.push_back(std::move(p));
        }
        if (list.empty()) throw fail("empty posting list");
    }
    return index;
}

inline InvertedIndex read_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError(path.string());
    return read_index(in);
}

}  // namespace esair
