#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esair/errors.hpp"
#include "esair/lexicon.hpp"
#include "esair/segmentation.hpp"

namespace esair {

struct StemResult {
    std::u32string surface;
    std::u32string root;
    std::optional<Template> matched_template;  // empty on fallback
    Segmentation segmentation;
    bool validated = false;  // root found in the root dictionary
    bool fallback = false;   // no template matched; root holds base2

    bool operator==(const StemResult&) const = default;
};

/// Templates of the same letter count whose infix-position letters coincide
/// with the word, in lexicon file order.
inline std::vector<Template> match_template(std::u32string_view base2, const Lexicon& lex) {
    std::vector<Template> out;
    for (const auto& t : lex.templates_of_length(base2.size())) {
        bool ok = true;
        for (std::size_t pos : t.infix_positions) {
            if (base2[pos - 1] != t.pattern[pos - 1]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(t);
    }
    return out;
}

/// Deletes the letters at the template's infix positions, keeping order.
inline std::u32string extract_root(std::u32string_view base2, const Template& tpl) {
    if (base2.size() != tpl.pattern.size()) throw LengthMismatchError();
    std::u32string root;
    root.reserve(base2.size() - tpl.infix_positions.size());
    std::size_t next_infix = 0;
    for (std::size_t i = 1; i <= base2.size(); ++i) {
        if (next_infix < tpl.infix_positions.size() && tpl.infix_positions[next_infix] == i) {
            ++next_infix;
            continue;
        }
        root.push_back(base2[i - 1]);
    }
    return root;
}

/// Candidate roots over all segmentations and matching templates, selected by
/// priority: dictionary-validated root, then 3-letter root, then earlier
/// segmentation, then earlier template. Falls back to the first
/// segmentation's base2 when nothing matches.
inline StemResult stem(std::u32string_view word, const Lexicon& lex) {
    if (word.empty()) throw EmptyWordError();
    const auto segmentations = enumerate_segmentations(word, lex);

    struct Candidate {
        std::u32string root;
        std::size_t seg_index;
        std::size_t tpl_index;
        bool valid;
        const Segmentation* seg;
        const Template* tpl;
    };
    std::optional<Candidate> best;
    auto better = [](const Candidate& a, const Candidate& b) {
        if (a.valid != b.valid) return a.valid;
        const bool a3 = a.root.size() == 3, b3 = b.root.size() == 3;
        if (a3 != b3) return a3;
        if (a.seg_index != b.seg_index) return a.seg_index < b.seg_index;
        return a.tpl_index < b.tpl_index;
    };

    for (std::size_t si = 0; si < segmentations.size(); ++si) {
        const auto& seg = segmentations[si];
        const auto matches = match_template(seg.base2, lex);
        for (std::size_t ti = 0; ti < matches.size(); ++ti) {
            Candidate cand{extract_root(seg.base2, matches[ti]), si, ti, false, &seg, nullptr};
            cand.valid = lex.roots.count(cand.root) != 0;
            if (!best || better(cand, *best)) {
                // Keep the template by value via the lexicon's stable storage.
                const auto& stored = lex.templates_of_length(seg.base2.size());
                for (const auto& t : stored) {
                    if (t == matches[ti]) {
                        cand.tpl = &t;
                        break;
                    }
                }
                best = std::move(cand);
            }
        }
    }

    StemResult result;
    result.surface = std::u32string(word);
    if (best) {
        result.root = best->root;
        result.matched_template = *best->tpl;
        result.segmentation = *best->seg;
        result.validated = best->valid;
        result.fallback = false;
        return result;
    }
    result.fallback = true;
    result.validated = false;
    if (!segmentations.empty()) {
        result.segmentation = segmentations.front();
        result.root = result.segmentation.base2;
    } else {
        // Degenerate input (single-letter base1 everywhere): keep the word as
        // its own base behind the first clitic split.
        const auto clitics = enumerate_clitic_splits(word, lex);
        const auto& first = clitics.front();
        result.segmentation =
            Segmentation{first.proclitic, {}, first.base1, {}, first.enclitic};
        result.root = first.base1;
    }
    return result;
}

inline bool stem_equal(std::u32string_view a, std::u32string_view b, const Lexicon& lex) {
    return stem(a, lex).root == stem(b, lex).root;
}

}  // namespace esair
