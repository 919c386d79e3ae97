#include <catch2/catch_amalgamated.hpp>

#include "esair/retrieval.hpp"
#include "support/paths.hpp"

using esair::build_index;
using esair::build_verbatim_index;
using esair::process_query;
using esair::process_query_verbatim;
using esair::search;
using esair::search_verbatim;

namespace {

const esair::Lexicon& lex() {
    static const esair::Lexicon l = esair::load_lexicon(testsupport::lexicon_dir());
    return l;
}

const std::vector<esair::Document>& teacher_docs() {
    static const auto docs =
        testsupport::load_corpus(testsupport::fixtures_dir() / "corpus_teachers");
    return docs;
}

}  // namespace

TEST_CASE("a single word query becomes its root") {
    const auto q = process_query("معلم", lex());
    REQUIRE(q.stems.size() == 1);
    CHECK(q.stems[0] == U"علم");
}

TEST_CASE("stop words are filtered from queries") {
    const auto q = process_query("الصدق في القول", lex());
    REQUIRE(q.stems.size() == 2);
    CHECK(q.stems[0] == U"صدق");
    CHECK(q.stems[1] == U"قول");
}

TEST_CASE("duplicate stems collapse") {
    const auto q = process_query("المعلم والمعلمون", lex());
    CHECK(q.stems == std::vector<std::u32string>{U"علم"});
}

TEST_CASE("an all-stop-word query is an error") {
    CHECK_THROWS_AS(process_query("في", lex()), esair::EmptyQueryError);
    CHECK_THROWS_AS(process_query("123", lex()), esair::EmptyQueryError);
}

TEST_CASE("the teacher query hits all three documents stemmed") {
    REQUIRE(teacher_docs().size() == 3);
    const auto index = build_index(teacher_docs(), lex());
    const auto results = search(index, process_query("معلم", lex()), 10);
    REQUIRE(results.size() == 3);
    for (const auto& r : results) CHECK(r.matched_stems == 1);
    // t3 mentions both المعلمون and العلمي, which share the root.
    CHECK(results[0].doc_id == "t3");
    CHECK(results[0].score == 2);
    CHECK(results[1].doc_id == "t1");
    CHECK(results[2].doc_id == "t2");
}

TEST_CASE("the teacher query hits nothing verbatim") {
    const auto index = build_verbatim_index(teacher_docs(), lex());
    const auto results = search_verbatim(index, process_query_verbatim("معلم", lex()), 10);
    CHECK(results.empty());
}

TEST_CASE("verbatim matching still finds exact tokens") {
    const auto index = build_verbatim_index(teacher_docs(), lex());
    const auto results = search_verbatim(index, process_query_verbatim("المعلمون", lex()), 10);
    REQUIRE(results.size() == 1);
    CHECK(results[0].doc_id == "t3");
}

TEST_CASE("search over an empty index returns nothing") {
    const esair::InvertedIndex empty;
    CHECK(search(empty, process_query("معلم", lex()), 10).empty());
}

TEST_CASE("ranking is by matched stems, then score, then doc id") {
    const std::vector<esair::Document> docs{
        {"a", "المعلم يكتب"},              // both query stems, score 2
        {"b", "المعلم المعلمون المعلمات"},  // one stem, tf 3
        {"c", "المعلم"},                    // one stem, tf 1
        {"d", "بحث"},                       // no query stem
    };
    const auto index = build_index(docs, lex());
    const auto results = search(index, process_query("معلم كتاب", lex()), 10);
    REQUIRE(results.size() == 3);
    CHECK(results[0].doc_id == "a");
    CHECK(results[0].matched_stems == 2);
    CHECK(results[0].rank == 1);
    CHECK(results[1].doc_id == "b");
    CHECK(results[1].score == 3);
    CHECK(results[2].doc_id == "c");
    CHECK(results[2].rank == 3);
}

TEST_CASE("doc id breaks exact ties deterministically") {
    const std::vector<esair::Document> docs{
        {"b", "المعلم"},
        {"a", "المعلم"},
    };
    const auto index = build_index(docs, lex());
    const auto results = search(index, process_query("معلم", lex()), 10);
    REQUIRE(results.size() == 2);
    CHECK(results[0].doc_id == "a");
    CHECK(results[1].doc_id == "b");
}

TEST_CASE("k truncates after ranking") {
    const std::vector<esair::Document> docs{
        {"a", "المعلم المعلم"},
        {"b", "المعلم"},
        {"c", "المعلم المعلم المعلم"},
    };
    const auto index = build_index(docs, lex());
    const auto results = search(index, process_query("معلم", lex()), 2);
    REQUIRE(results.size() == 2);
    CHECK(results[0].doc_id == "c");
    CHECK(results[1].doc_id == "a");
    CHECK(results[1].rank == 2);
}

TEST_CASE("single-word pipeline coherence") {
    for (const char* word : {"المعلمات", "مفاتيح", "بالصدق"}) {
        const auto q = process_query(word, lex());
        const auto direct = esair::stem(esair::normalize_word(std::string_view(word)), lex());
        REQUIRE(q.stems.size() == 1);
        CHECK(q.stems[0] == direct.root);
    }
}

TEST_CASE("stemmed retrieval dominates verbatim retrieval") {
    const auto docs = testsupport::load_corpus(testsupport::fixtures_dir() / "corpus_sec3");
    const auto stemmed = build_index(docs, lex());
    const auto surface = build_verbatim_index(docs, lex());
    for (const char* query : {"الكتب", "الصدق", "بالبحث العلمي", "معلم"}) {
        const auto wide = search(stemmed, process_query(query, lex()), docs.size());
        const auto narrow = search_verbatim(surface, process_query_verbatim(query, lex()),
                                            docs.size());
        std::set<std::string> wide_ids, narrow_ids;
        for (const auto& r : wide) wide_ids.insert(r.doc_id);
        for (const auto& r : narrow) narrow_ids.insert(r.doc_id);
        CHECK(std::includes(wide_ids.begin(), wide_ids.end(), narrow_ids.begin(),
                            narrow_ids.end()));
    }
}
