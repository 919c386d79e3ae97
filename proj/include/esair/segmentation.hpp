#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "esair/errors.hpp"
#include "esair/lexicon.hpp"

namespace esair {

/// word == proclitic + base1 + enclitic
struct CliticSplit {
    std::u32string proclitic;
    std::u32string base1;
    std::u32string enclitic;

    bool operator==(const CliticSplit&) const = default;
};

/// base1 == prefix + base2 + suffix
struct AffixSplit {
    std::u32string prefix;
    std::u32string base2;
    std::u32string suffix;

    bool operator==(const AffixSplit&) const = default;
};

/// word == proclitic + prefix + base2 + suffix + enclitic
struct Segmentation {
    std::u32string proclitic;
    std::u32string prefix;
    std::u32string base2;
    std::u32string suffix;
    std::u32string enclitic;

    bool operator==(const Segmentation&) const = default;

    std::u32string reassemble() const {
        return proclitic + prefix + base2 + suffix + enclitic;
    }
};

namespace detail {

inline bool starts_with(std::u32string_view s, std::u32string_view prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

inline bool ends_with(std::u32string_view s, std::u32string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Longest attachments first; deterministic tie-breaking.
template <typename Split>
void order_splits(std::vector<Split>& splits, const std::u32string Split::*left,
                  const std::u32string Split::*mid, const std::u32string Split::*right) {
    std::sort(splits.begin(), splits.end(), [&](const Split& a, const Split& b) {
        const std::size_t sum_a = (a.*left).size() + (a.*right).size();
        const std::size_t sum_b = (b.*left).size() + (b.*right).size();
        if (sum_a != sum_b) return sum_a > sum_b;
        if ((a.*left).size() != (b.*left).size()) return (a.*left).size() > (b.*left).size();
        return (a.*mid) < (b.*mid);
    });
}

}  // namespace detail

inline std::vector<CliticSplit> enumerate_clitic_splits(std::u32string_view word,
                                                        const Lexicon& lex) {
    if (word.empty()) throw EmptyWordError();
    std::vector<CliticSplit> out;
    for (const auto& p : lex.proclitics) {
        if (!detail::starts_with(word, p)) continue;
        const std::u32string_view rest = word.substr(p.size());
        for (const auto& e : lex.enclitics) {
            if (!detail::ends_with(rest, e)) continue;
            const std::u32string_view base1 = rest.substr(0, rest.size() - e.size());
            if (base1.empty()) continue;
            if (lex.is_incompatible(IncompatKind::Clitic, p, e)) continue;
            out.push_back(CliticSplit{p, std::u32string(base1), e});
        }
    }
    detail::order_splits(out, &CliticSplit::proclitic, &CliticSplit::base1,
                         &CliticSplit::enclitic);
    return out;
}

inline std::vector<AffixSplit> enumerate_affix_splits(std::u32string_view base1,
                                                      const Lexicon& lex) {
    if (base1.empty()) throw EmptyWordError();
    std::vector<AffixSplit> out;
    for (const auto& p : lex.prefixes) {
        if (!detail::starts_with(base1, p)) continue;
        const std::u32string_view rest = base1.substr(p.size());
        for (const auto& s : lex.suffixes) {
            if (!detail::ends_with(rest, s)) continue;
            const std::u32string_view base2 = rest.substr(0, rest.size() - s.size());
            if (base2.size() < 2) continue;  // a root keeps at least 2 letters
            if (lex.is_incompatible(IncompatKind::Affix, p, s)) continue;
            out.push_back(AffixSplit{p, std::u32string(base2), s});
        }
    }
    detail::order_splits(out, &AffixSplit::prefix, &AffixSplit::base2, &AffixSplit::suffix);
    return out;
}

/// Both cutting stages combined, clitic-major, in enumeration order.
inline std::vector<Segmentation> enumerate_segmentations(std::u32string_view word,
                                                         const Lexicon& lex) {
    std::vector<Segmentation> out;
    std::set<std::tuple<std::u32string, std::u32string, std::u32string, std::u32string,
                        std::u32string>>
        seen;
    for (const auto& cs : enumerate_clitic_splits(word, lex)) {
        for (const auto& as : enumerate_affix_splits(cs.base1, lex)) {
            Segmentation seg{cs.proclitic, as.prefix, as.base2, as.suffix, cs.enclitic};
            if (seen.emplace(seg.proclitic, seg.prefix, seg.base2, seg.suffix, seg.enclitic)
                    .second) {
                out.push_back(std::move(seg));
            }
        }
    }
    return out;
}

}  // namespace esair
