#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "esair/segmentation.hpp"
#include "support/oracle.hpp"
#include "support/paths.hpp"

using esair::AffixSplit;
using esair::CliticSplit;
using esair::enumerate_affix_splits;
using esair::enumerate_clitic_splits;
using esair::enumerate_segmentations;
using esair::Segmentation;

namespace {

const esair::Lexicon& lex() {
    static const esair::Lexicon l = esair::load_lexicon(testsupport::lexicon_dir());
    return l;
}

}  // namespace

TEST_CASE("the worked clitic decomposition") {
    const auto splits = enumerate_clitic_splits(U"أستخرجانها", lex());
    REQUIRE_FALSE(splits.empty());
    // Longest attachments first: the أس/ها cut is the very first.
    CHECK(splits.front() == CliticSplit{U"أس", U"تخرجان", U"ها"});
    const bool has_trivial =
        std::find(splits.begin(), splits.end(), CliticSplit{U"", U"أستخرجانها", U""}) !=
        splits.end();
    CHECK(has_trivial);
}

TEST_CASE("compatibility accepts the fa/huma cut") {
    const auto splits = enumerate_clitic_splits(U"فكتابهما", lex());
    const bool found = std::find(splits.begin(), splits.end(),
                                 CliticSplit{U"ف", U"كتاب", U"هما"}) != splits.end();
    CHECK(found);
}

TEST_CASE("incompatible combinations are filtered") {
    // بني is in the clitic incompatibility table: no (ب, *, ني) split survives.
    const auto splits = enumerate_clitic_splits(U"بكتابني", lex());
    for (const auto& s : splits) {
        CHECK_FALSE((s.proclitic == U"ب" && s.enclitic == U"ني"));
    }
    const bool kept_other = std::find(splits.begin(), splits.end(),
                                      CliticSplit{U"ب", U"كتابني", U""}) != splits.end();
    CHECK(kept_other);
}

TEST_CASE("a bare word still has its trivial split") {
    const auto splits = enumerate_clitic_splits(U"كتب", lex());
    REQUIRE_FALSE(splits.empty());
    CHECK(splits.back() == CliticSplit{U"", U"كتب", U""});
}

TEST_CASE("trivial split is last in the ordering") {
    for (const std::u32string word : {U"أستخرجانها", U"فكتابهما", U"المعلمون", U"صالح"}) {
        const auto splits = enumerate_clitic_splits(word, lex());
        REQUIRE_FALSE(splits.empty());
        CHECK(splits.back() == CliticSplit{U"", word, U""});
    }
}

TEST_CASE("the worked affix decomposition") {
    const auto splits = enumerate_affix_splits(U"تخرجان", lex());
    REQUIRE_FALSE(splits.empty());
    CHECK(splits.front() == AffixSplit{U"ت", U"خرج", U"ان"});
}

TEST_CASE("affix splits keep at least two base letters") {
    for (const std::u32string word : {U"تخرجان", U"معلمون", U"كتاب"}) {
        for (const auto& s : enumerate_affix_splits(word, lex())) {
            CHECK(s.base2.size() >= 2);
        }
    }
    CHECK(enumerate_affix_splits(U"ت", lex()).empty());
}

TEST_CASE("whole words survive the affix stage") {
    const auto khrj = enumerate_affix_splits(U"خرج", lex());
    CHECK(std::find(khrj.begin(), khrj.end(), AffixSplit{U"", U"خرج", U""}) != khrj.end());
    const auto salih = enumerate_affix_splits(U"صالح", lex());
    CHECK(std::find(salih.begin(), salih.end(), AffixSplit{U"", U"صالح", U""}) != salih.end());
}

TEST_CASE("full segmentation of the worked example") {
    const auto segs = enumerate_segmentations(U"أستخرجانها", lex());
    REQUIRE_FALSE(segs.empty());
    CHECK(segs.front() == Segmentation{U"أس", U"ت", U"خرج", U"ان", U"ها"});
}

TEST_CASE("a bare word has the all-empty segmentation") {
    const auto segs = enumerate_segmentations(U"كتب", lex());
    const bool found = std::find(segs.begin(), segs.end(),
                                 Segmentation{U"", U"", U"كتب", U"", U""}) != segs.end();
    CHECK(found);
}

TEST_CASE("segmentation count of the plural example") {
    // Brute-enumerated over the seed lexicon: ال+معلمون and the trivial cut,
    // each with the ون/trivial suffix cuts.
    const auto segs = enumerate_segmentations(U"المعلمون", lex());
    CHECK(segs.size() == 4);
    CHECK(segs.size() >= 2);
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(enumerate_clitic_splits(U"", lex()), esair::EmptyWordError);
    CHECK_THROWS_AS(enumerate_affix_splits(U"", lex()), esair::EmptyWordError);
    CHECK_THROWS_AS(enumerate_segmentations(U"", lex()), esair::EmptyWordError);
}

TEST_CASE("enumeration equals the brute-force reference on the seed lexicon") {
    std::mt19937_64 rng(20240901);
    const std::u32string pool = U"ابتكلمنهويسفأعدرقجخصغة";
    std::uniform_int_distribution<std::size_t> len_dist(1, 8);
    std::uniform_int_distribution<std::size_t> letter_dist(0, pool.size() - 1);
    for (int iter = 0; iter < 10000; ++iter) {
        std::u32string word;
        const std::size_t len = len_dist(rng);
        for (std::size_t i = 0; i < len; ++i) word.push_back(pool[letter_dist(rng)]);

        const auto got_clitic = enumerate_clitic_splits(word, lex());
        const auto want_clitic = testsupport::brute_clitic_splits(word, lex());
        REQUIRE(got_clitic == want_clitic);

        const auto got_affix = enumerate_affix_splits(word, lex());
        const auto want_affix = testsupport::brute_affix_splits(word, lex());
        REQUIRE(got_affix == want_affix);

        const auto got_segs = enumerate_segmentations(word, lex());
        const auto want_segs = testsupport::brute_segmentations(word, lex());
        REQUIRE(got_segs == want_segs);
    }
}
