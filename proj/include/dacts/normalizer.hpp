// Text cleanup pipeline: placeholder substitution, emoticon/abbreviation
// expansion, apostrophe folding, whitespace consolidation, entity masking.
#pragma once

#include <map>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dacts/util.hpp"

namespace dacts::normalizer {

struct TraceEntry {
    std::string rule;
    std::size_t offset = 0;  // position in the text as it was when the rule fired
    std::string before;
    std::string after;
};

struct CleanText {
    std::string text;
    std::vector<TraceEntry> trace;
};

struct SubstitutionTable {
    std::map<std::string, std::string> emoticons;      // lowercase surface -> word
    std::map<std::string, std::string> abbreviations;  // lowercase surface -> phrase
};

struct Gazetteer {
    std::set<std::string> person, country, county, city, company;  // lowercase names
    std::set<std::string> allowlist;  // never masked, wins over every name set

    bool empty() const {
        return person.empty() && country.empty() && county.empty() && city.empty() &&
               company.empty();
    }
    bool contains(const std::string& lower) const {
        return person.count(lower) || country.count(lower) || county.count(lower) ||
               city.count(lower) || company.count(lower);
    }
};

namespace detail {

inline void rewrite(std::string& s, std::vector<TraceEntry>& trace, const char* rule,
                    std::size_t offset, std::size_t len, const std::string& replacement) {
    trace.push_back({rule, offset, s.substr(offset, len), replacement});
    s.replace(offset, len, replacement);
}

// Applies `re` left to right over the evolving string, replacing each match.
inline void regex_stage(std::string& s, std::vector<TraceEntry>& trace, const char* rule,
                        const std::regex& re, const std::string& replacement) {
    std::size_t pos = 0;
    std::smatch m;
    while (pos < s.size()) {
        std::string tail = s.substr(pos);
        if (!std::regex_search(tail, m, re)) break;
        std::size_t at = pos + static_cast<std::size_t>(m.position(0));
        rewrite(s, trace, rule, at, static_cast<std::size_t>(m.length(0)), replacement);
        pos = at + replacement.size();
    }
}

// Replaces whole whitespace-delimited tokens via case-insensitive table lookup.
inline void token_map_stage(std::string& s, std::vector<TraceEntry>& trace, const char* rule,
                            const std::map<std::string, std::string>& table) {
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_ascii_space(s[i])) ++i;
        std::size_t b = i;
        while (i < s.size() && !is_ascii_space(s[i])) ++i;
        if (i == b) break;
        std::string token = to_lower(std::string_view(s).substr(b, i - b));
        auto it = table.find(token);
        if (it != table.end()) {
            rewrite(s, trace, rule, b, i - b, it->second);
            i = b + it->second.size();
        }
    }
}

inline bool alpha_at(const std::string& s, std::size_t i) {
    return i < s.size() && is_ascii_alpha(s[i]);
}

}  // namespace detail

// Cleanup stages, in order: URLs -> "URL"; @mentions -> "ATUSER"; hashtags keep
// the tag word; emoticons and abbreviations expand via the table; apostrophes
// fold out of alphabetic tokens (don't -> dont); whitespace collapses to single
// spaces. The trace records every rewrite against the evolving string, so
// replaying it over the raw input reproduces the output.
inline CleanText clean_text(std::string_view raw, const SubstitutionTable& table) {
    static const std::regex url_re(R"((https?://[^\s]+|www\.[^\s]+))",
                                   std::regex::ECMAScript | std::regex::icase);
    static const std::regex mention_re(R"(@\w+)", std::regex::ECMAScript);
    static const std::regex hashtag_re(R"(#+(?=\w))", std::regex::ECMAScript);

    CleanText out;
    out.text = std::string(raw);
    std::string& s = out.text;
    auto& trace = out.trace;

    detail::regex_stage(s, trace, "url", url_re, "URL");
    detail::regex_stage(s, trace, "mention", mention_re, "ATUSER");
    detail::regex_stage(s, trace, "hashtag", hashtag_re, "");
    detail::token_map_stage(s, trace, "emoticon", table.emoticons);
    detail::token_map_stage(s, trace, "abbreviation", table.abbreviations);

    // apostrophe fold: straight ' or curly ’ (U+2019) between letters
    for (std::size_t i = 0; i < s.size();) {
        std::size_t len = 0;
        if (s[i] == '\'') {
            len = 1;
        } else if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
                   static_cast<unsigned char>(s[i + 1]) == 0x80 &&
                   static_cast<unsigned char>(s[i + 2]) == 0x99) {
            len = 3;
        }
        if (len > 0 && i > 0 && detail::alpha_at(s, i - 1) && detail::alpha_at(s, i + len)) {
            detail::rewrite(s, trace, "apostrophe", i, len, "");
        } else {
            i += len > 0 ? len : 1;
        }
    }

    // whitespace: collapse runs, normalize tabs/newlines, trim ends
    for (std::size_t i = 0; i < s.size();) {
        if (!is_ascii_space(s[i])) {
            ++i;
            continue;
        }
        std::size_t b = i;
        while (i < s.size() && is_ascii_space(s[i])) ++i;
        bool at_edge = (b == 0) || (i == s.size());
        std::string repl = at_edge ? "" : " ";
        if (s.substr(b, i - b) != repl) {
            detail::rewrite(s, trace, "whitespace", b, i - b, repl);
            i = b + repl.size();
        }
    }
    return out;
}

// Masks whole tokens found in any gazetteer set with "ENT". Placeholders and
// allowlisted words are skipped.
inline CleanText resolve_entities(CleanText c, const Gazetteer& g) {
    if (g.empty()) return c;
    std::string& s = c.text;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_ascii_space(s[i])) ++i;
        std::size_t b = i;
        while (i < s.size() && !is_ascii_space(s[i])) ++i;
        if (i == b) break;
        std::string token = s.substr(b, i - b);
        if (token == "URL" || token == "ATUSER" || token == "ENT") continue;
        std::string lower = to_lower(token);
        if (g.allowlist.count(lower)) continue;
        if (g.contains(lower)) {
            detail::rewrite(s, c.trace, "entity", b, i - b, "ENT");
            i = b + 3;
        }
    }
    return c;
}

// Replays a trace over the raw input; throws if any entry no longer matches.
inline std::string apply_trace(std::string_view raw, const std::vector<TraceEntry>& trace) {
    std::string s(raw);
    for (const TraceEntry& e : trace) {
        if (e.offset > s.size() || s.compare(e.offset, e.before.size(), e.before) != 0) {
            throw std::runtime_error("trace replay mismatch at rule '" + e.rule + "'");
        }
        s.replace(e.offset, e.before.size(), e.after);
    }
    return s;
}

// Table hygiene: no replacement may introduce a negation cue that was not in
// the original text.
inline void validate_no_cues(const SubstitutionTable& table,
                             const std::set<std::string>& cues) {
    auto check = [&cues](const std::map<std::string, std::string>& m, const char* which) {
        for (const auto& [surface, replacement] : m) {
            for (const std::string& word : split_ws(replacement)) {
                if (cues.count(to_lower(word))) {
                    throw std::runtime_error(std::string(which) + " entry '" + surface +
                                             "' expands to negation cue '" + word + "'");
                }
            }
        }
    };
    check(table.emoticons, "emoticon");
    check(table.abbreviations, "abbreviation");
}

}  // namespace dacts::normalizer
