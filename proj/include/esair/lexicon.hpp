#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "esair/errors.hpp"
#include "esair/normalize.hpp"
#include "esair/unicode.hpp"

namespace esair {

/// A fixed-length pattern whose infix-position letters are augments;
/// deleting them from a matching word exposes the root.
struct Template {
    std::u32string pattern;
    std::vector<std::size_t> infix_positions;  // 1-based, strictly increasing

    bool operator==(const Template&) const = default;
};

enum class IncompatKind { Clitic, Affix };

struct LexiconPaths {
    std::filesystem::path proclitics;
    std::filesystem::path enclitics;
    std::filesystem::path prefixes;
    std::filesystem::path suffixes;
    std::filesystem::path incompat_clitic;
    std::filesystem::path incompat_affix;
    std::filesystem::path templates;
    std::filesystem::path roots;
    std::filesystem::path stop_words;

    static LexiconPaths in_directory(const std::filesystem::path& dir) {
        LexiconPaths p;
        p.proclitics = dir / "proclitics.txt";
        p.enclitics = dir / "enclitics.txt";
        p.prefixes = dir / "prefixes.txt";
        p.suffixes = dir / "suffixes.txt";
        p.incompat_clitic = dir / "incompat_clitic.txt";
        p.incompat_affix = dir / "incompat_affix.txt";
        p.templates = dir / "templates.tsv";
        p.roots = dir / "roots.txt";
        p.stop_words = dir / "stopwords.txt";
        return p;
    }
};

struct Lexicon {
    std::set<std::u32string> proclitics;
    std::set<std::u32string> enclitics;
    std::set<std::u32string> prefixes;
    std::set<std::u32string> suffixes;
    std::set<std::u32string> clitic_incompat;  // proclitic+enclitic strings
    std::set<std::u32string> affix_incompat;   // prefix+suffix strings
    std::map<std::size_t, std::vector<Template>> templates;  // keyed by pattern length
    std::set<std::u32string> roots;
    std::set<std::u32string> stop_words;

    bool operator==(const Lexicon&) const = default;

    bool is_stop_word(std::u32string_view word) const {
        return stop_words.count(std::u32string(word)) != 0;
    }

    // Tests exactly concat(left,right); never the reverse order.
    bool is_incompatible(IncompatKind kind, std::u32string_view left,
                         std::u32string_view right) const {
        std::u32string joined;
        joined.reserve(left.size() + right.size());
        joined.append(left).append(right);
        const auto& table = kind == IncompatKind::Clitic ? clitic_incompat : affix_incompat;
        return table.count(joined) != 0;
    }

    const std::vector<Template>& templates_of_length(std::size_t n) const {
        static const std::vector<Template> kEmpty;
        auto it = templates.find(n);
        return it == templates.end() ? kEmpty : it->second;
    }
};

namespace detail {

inline std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError(path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

inline bool skippable(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t");
    return pos == std::string::npos || line[pos] == '#';
}

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

inline std::u32string parse_entry(const std::filesystem::path& path, std::size_t line_no,
                                  const std::string& raw) {
    const std::u32string norm = normalize_word(std::string_view(raw));
    if (norm.empty()) {
        throw MalformedLineError(path.string(), line_no, "entry normalizes to nothing");
    }
    for (char32_t c : norm) {
        if (!unicode::is_arabic_letter(c)) {
            throw MalformedLineError(path.string(), line_no,
                                     "entry contains a non-Arabic-letter character");
        }
    }
    return norm;
}

inline void load_word_set(const std::filesystem::path& path, std::set<std::u32string>& out) {
    const auto lines = read_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (skippable(lines[i])) continue;
        out.insert(parse_entry(path, i + 1, trim(lines[i])));
    }
}

inline void load_templates(const std::filesystem::path& path,
                           std::map<std::size_t, std::vector<Template>>& out) {
    const auto lines = read_lines(path);
    std::map<std::u32string, std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (skippable(lines[i])) continue;
        const std::size_t line_no = i + 1;
        const std::string& line = lines[i];
        const auto tab = line.find('\t');
        const std::string pattern_field = trim(tab == std::string::npos ? line : line.substr(0, tab));
        const std::string code_field = trim(tab == std::string::npos ? "" : line.substr(tab + 1));

        const std::u32string pattern = parse_entry(path, line_no, pattern_field);
        std::vector<std::size_t> positions;
        if (!code_field.empty()) {
            std::istringstream codes(code_field);
            std::string item;
            while (std::getline(codes, item, ',')) {
                item = trim(item);
                std::size_t pos = 0;
                try {
                    std::size_t used = 0;
                    pos = std::stoul(item, &used);
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::exception&) {
                    throw MalformedLineError(path.string(), line_no,
                                             "infix position is not a number: '" + item + "'");
                }
                if (pos < 1 || pos > pattern.size()) {
                    throw MalformedLineError(path.string(), line_no, "infix position out of range");
                }
                if (!positions.empty() && pos <= positions.back()) {
                    throw MalformedLineError(path.string(), line_no,
                                             "infix positions must be strictly increasing");
                }
                positions.push_back(pos);
            }
        }
        if (pattern.size() - positions.size() < 2) {
            throw MalformedLineError(path.string(), line_no,
                                     "template leaves fewer than 2 root letters");
        }
        auto it = seen.find(pattern);
        if (it != seen.end()) {
            if (it->second != positions) {
                throw DuplicateTemplateError("template '" + unicode::encode_utf8(pattern) +
                                             "' redefined with a different infix code (" +
                                             path.string() + ":" + std::to_string(line_no) + ")");
            }
            continue;  // identical repeat, ignore
        }
        seen.emplace(pattern, positions);
        out[pattern.size()].push_back(Template{pattern, std::move(positions)});
    }
}

}  // namespace detail

inline Lexicon load_lexicon(const LexiconPaths& paths) {
    Lexicon lex;
    detail::load_word_set(paths.proclitics, lex.proclitics);
    detail::load_word_set(paths.enclitics, lex.enclitics);
    detail::load_word_set(paths.prefixes, lex.prefixes);
    detail::load_word_set(paths.suffixes, lex.suffixes);
    detail::load_word_set(paths.incompat_clitic, lex.clitic_incompat);
    detail::load_word_set(paths.incompat_affix, lex.affix_incompat);
    detail::load_templates(paths.templates, lex.templates);
    detail::load_word_set(paths.roots, lex.roots);
    detail::load_word_set(paths.stop_words, lex.stop_words);
    // The empty clitic/affix is always available; data files never list it.
    lex.proclitics.insert(std::u32string());
    lex.enclitics.insert(std::u32string());
    lex.prefixes.insert(std::u32string());
    lex.suffixes.insert(std::u32string());
    return lex;
}

inline Lexicon load_lexicon(const std::filesystem::path& dir) {
    return load_lexicon(LexiconPaths::in_directory(dir));
}

namespace detail {

inline void save_word_set(const std::filesystem::path& path, const std::set<std::u32string>& set) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    for (const auto& entry : set) {
        if (entry.empty()) continue;
        out << unicode::encode_utf8(entry) << '\n';
    }
}

}  // namespace detail

/// Writes a canonical (sorted, comment-free) copy; reloading it yields an
/// equal Lexicon.
inline void save_lexicon(const Lexicon& lex, const LexiconPaths& paths) {
    detail::save_word_set(paths.proclitics, lex.proclitics);
    detail::save_word_set(paths.enclitics, lex.enclitics);
    detail::save_word_set(paths.prefixes, lex.prefixes);
    detail::save_word_set(paths.suffixes, lex.suffixes);
    detail::save_word_set(paths.incompat_clitic, lex.clitic_incompat);
    detail::save_word_set(paths.incompat_affix, lex.affix_incompat);
    detail::save_word_set(paths.roots, lex.roots);
    detail::save_word_set(paths.stop_words, lex.stop_words);
    std::ofstream out(paths.templates, std::ios::binary);
    if (!out) throw Error("cannot write " + paths.templates.string());
    for (const auto& [len, group] : lex.templates) {
        (void)len;
        for (const auto& t : group) {
            out << unicode::encode_utf8(t.pattern) << '\t';
            for (std::size_t i = 0; i < t.infix_positions.size(); ++i) {
                if (i) out << ',';
                out << t.infix_positions[i];
            }
            out << '\n';
        }
    }
}

inline void save_lexicon(const Lexicon& lex, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    save_lexicon(lex, LexiconPaths::in_directory(dir));
}

}  // namespace esair
