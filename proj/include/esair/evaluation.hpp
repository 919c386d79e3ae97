#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "esair/errors.hpp"
#include "esair/normalize.hpp"
#include "esair/retrieval.hpp"
#include "esair/unicode.hpp"

namespace esair {

/// query_id -> relevant doc ids
using Qrels = std::map<std::string, std::set<std::string>>;

struct EvalMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double silence = 1.0;  // 1 - recall
    std::size_t retrieved = 0;
    std::size_t relevant = 0;
    std::size_t relevant_retrieved = 0;
};

struct StemAccuracy {
    std::size_t correct = 0;
    std::size_t total_valid = 0;
    double accuracy = 0.0;
};

/// Set-level precision/recall/silence over the full returned list.
inline EvalMetrics eval_query(const std::vector<SearchResult>& results,
                              const std::set<std::string>& relevant) {
    if (relevant.empty()) throw EmptyRelevantSetError();
    EvalMetrics m;
    m.retrieved = results.size();
    m.relevant = relevant.size();
    for (const auto& r : results) {
        if (relevant.count(r.doc_id)) ++m.relevant_retrieved;
    }
    m.precision = m.retrieved == 0 ? 0.0
                                   : static_cast<double>(m.relevant_retrieved) /
                                         static_cast<double>(m.retrieved);
    m.recall = static_cast<double>(m.relevant_retrieved) / static_cast<double>(m.relevant);
    m.silence = 1.0 - m.recall;
    return m;
}

inline StemAccuracy stem_accuracy(
    const std::vector<std::pair<std::u32string, std::u32string>>& predictions,
    const std::map<std::u32string, std::u32string>& gold) {
    StemAccuracy acc;
    acc.total_valid = predictions.size();
    for (const auto& [word, predicted_root] : predictions) {
        auto it = gold.find(word);
        if (it == gold.end()) throw MissingGoldError(unicode::encode_utf8(word));
        if (it->second == predicted_root) ++acc.correct;
    }
    acc.accuracy = acc.total_valid == 0
                       ? 0.0
                       : static_cast<double>(acc.correct) / static_cast<double>(acc.total_valid);
    return acc;
}

/// Interpolated precision at recall 0.0, 0.1, ..., 1.0:
/// P(r) = max precision at any point of the ranked list with recall >= r.
inline std::array<double, 11> eleven_point_precision(const std::vector<SearchResult>& results,
                                                     const std::set<std::string>& relevant) {
    if (relevant.empty()) throw EmptyRelevantSetError();
    const std::size_t total_relevant = relevant.size();
    std::array<double, 11> curve{};
    std::size_t found = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!relevant.count(results[i].doc_id)) continue;
        ++found;
        const double precision_here =
            static_cast<double>(found) / static_cast<double>(i + 1);
        for (std::size_t level = 0; level <= 10; ++level) {
            // recall_here >= level/10, compared in integers to stay exact
            if (found * 10 >= level * total_relevant && precision_here > curve[level]) {
                curve[level] = precision_here;
            }
        }
    }
    return curve;
}

/// Arithmetic mean of precision and recall across queries; silence is
/// recomputed as 1 - mean recall; counters are summed.
inline EvalMetrics macro_average(const std::vector<EvalMetrics>& per_query) {
    if (per_query.empty()) throw EmptyListError();
    EvalMetrics avg;
    for (const auto& m : per_query) {
        avg.precision += m.precision;
        avg.recall += m.recall;
        avg.retrieved += m.retrieved;
        avg.relevant += m.relevant;
        avg.relevant_retrieved += m.relevant_retrieved;
    }
    avg.precision /= static_cast<double>(per_query.size());
    avg.recall /= static_cast<double>(per_query.size());
    avg.silence = 1.0 - avg.recall;
    return avg;
}

/// query_id<TAB>doc_id per line; '#' starts a comment.
inline Qrels load_qrels(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError(path.string());
    Qrels qrels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
            throw MalformedLineError(path.string(), line_no, "expected query_id<TAB>doc_id");
        }
        qrels[line.substr(0, tab)].insert(line.substr(tab + 1));
    }
    return qrels;
}

/// word<TAB>root per line, normalized on load; '#' starts a comment.
inline std::map<std::u32string, std::u32string> load_gold_roots(
    const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError(path.string());
    std::map<std::u32string, std::u32string> gold;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw MalformedLineError(path.string(), line_no, "expected word<TAB>root");
        }
        const std::u32string word = normalize_word(std::string_view(line).substr(0, tab));
        const std::u32string root = normalize_word(std::string_view(line).substr(tab + 1));
        if (word.empty() || root.empty()) {
            throw MalformedLineError(path.string(), line_no, "empty word or root");
        }
        gold[word] = root;
    }
    return gold;
}

}  // namespace esair
