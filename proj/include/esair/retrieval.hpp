#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "esair/errors.hpp"
#include "esair/index.hpp"
#include "esair/lexicon.hpp"
#include "esair/normalize.hpp"
#include "esair/stemmer.hpp"

namespace esair {

struct Query {
    std::string raw;                    // original UTF-8 text
    std::vector<std::u32string> stems;  // distinct, first-occurrence order
};

struct SearchResult {
    std::string doc_id;
    std::size_t matched_stems = 0;  // distinct query terms present
    std::uint64_t score = 0;        // summed term frequency of matched terms
    std::size_t rank = 0;           // 1-based

    bool operator==(const SearchResult&) const = default;
};

namespace detail {

inline Query process_query_terms(std::string_view raw, const Lexicon& lex, bool stem_terms) {
    Query q;
    q.raw = std::string(raw);
    std::set<std::u32string> seen;
    for (const auto& token : tokenize(normalize_text(raw))) {
        if (lex.is_stop_word(token.surface)) continue;
        std::u32string term = stem_terms ? stem(token.surface, lex).root : token.surface;
        if (seen.insert(term).second) q.stems.push_back(std::move(term));
    }
    if (q.stems.empty()) throw EmptyQueryError();
    return q;
}

}  // namespace detail

/// Identical pipeline to indexing: normalize -> tokenize -> stop filter -> stem.
inline Query process_query(std::string_view raw, const Lexicon& lex) {
    return detail::process_query_terms(raw, lex, true);
}

/// No-stemming counterpart used by the verbatim matching baseline.
inline Query process_query_verbatim(std::string_view raw, const Lexicon& lex) {
    return detail::process_query_terms(raw, lex, false);
}

inline std::vector<SearchResult> search(const InvertedIndex& index, const Query& q,
                                        std::size_t k = 10) {
    struct Agg {
        std::size_t matched = 0;
        std::uint64_t score = 0;
    };
    std::map<std::string, Agg> by_doc;
    for (const auto& term : q.stems) {
        auto it = index.postings.find(term);
        if (it == index.postings.end()) continue;
        for (const auto& posting : it->second) {
            Agg& agg = by_doc[posting.doc_id];
            ++agg.matched;
            agg.score += posting.term_frequency;
        }
    }
    std::vector<SearchResult> results;
    results.reserve(by_doc.size());
    for (const auto& [doc_id, agg] : by_doc) {
        results.push_back(SearchResult{doc_id, agg.matched, agg.score, 0});
    }
    std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
        if (a.matched_stems != b.matched_stems) return a.matched_stems > b.matched_stems;
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    if (results.size() > k) results.resize(k);
    for (std::size_t i = 0; i < results.size(); ++i) results[i].rank = i + 1;
    return results;
}

/// Matching over a surface-keyed index; the query must come from
/// process_query_verbatim and the index from build_verbatim_index.
inline std::vector<SearchResult> search_verbatim(const InvertedIndex& surface_index,
                                                 const Query& surface_query, std::size_t k = 10) {
    return search(surface_index, surface_query, k);
}

}  // namespace esair
