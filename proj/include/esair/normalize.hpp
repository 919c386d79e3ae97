#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "esair/unicode.hpp"

namespace esair {

/// Canonical text: no diacritics, no tatweel, stable under renormalization.
struct NormalizedText {
    std::u32string text;

    bool operator==(const NormalizedText&) const = default;
};

struct Token {
    std::u32string surface;
    std::size_t position = 0;  // 0-based ordinal in the document

    bool operator==(const Token&) const = default;
};

inline NormalizedText normalize_text(std::u32string_view raw) {
    using namespace unicode;
    std::u32string stripped;
    stripped.reserve(raw.size());
    for (char32_t c : raw) {
        if (is_diacritic(c) || c == kTatweel) continue;
        stripped.push_back(c);
    }
    std::u32string out;
    out.reserve(stripped.size());
    for (std::size_t i = 0; i < stripped.size(); ++i) {
        char32_t c = stripped[i];
        const bool word_initial = i == 0 || !is_arabic_letter(stripped[i - 1]);
        const bool word_final = i + 1 == stripped.size() || !is_arabic_letter(stripped[i + 1]);
        if ((c == U'آ' || c == U'أ' || c == U'إ') && !word_initial) {
            c = U'ا';  // non-initial hamza-bearing alef -> bare alef
        } else if (c == U'ى' && word_final) {
            c = U'ي';  // final alef maksura -> yeh
        }
        out.push_back(c);
    }
    return NormalizedText{std::move(out)};
}

inline NormalizedText normalize_text(std::string_view raw_utf8) {
    return normalize_text(unicode::decode_utf8(raw_utf8));
}

/// Convenience for normalizing a single word or lexicon entry.
inline std::u32string normalize_word(std::u32string_view raw) {
    return normalize_text(raw).text;
}

inline std::u32string normalize_word(std::string_view raw_utf8) {
    return normalize_text(raw_utf8).text;
}

/// Maximal runs of Arabic letters; everything else is a separator.
inline std::vector<Token> tokenize(const NormalizedText& text) {
    std::vector<Token> tokens;
    std::u32string current;
    for (char32_t c : text.text) {
        if (unicode::is_arabic_letter(c)) {
            current.push_back(c);
        } else if (!current.empty()) {
            tokens.push_back(Token{std::move(current), tokens.size()});
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(Token{std::move(current), tokens.size()});
    }
    return tokens;
}

}  // namespace esair
