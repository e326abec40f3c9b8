// Tokenization and coarse part-of-speech tagging for cleaned tweet text.
#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dacts/util.hpp"

namespace dacts::nlp {

enum class Pos { NN, JJ, VB, AUX, PUNCT, OTHER };

inline const char* to_string(Pos p) {
    switch (p) {
        case Pos::NN: return "NN";
        case Pos::JJ: return "JJ";
        case Pos::VB: return "VB";
        case Pos::AUX: return "AUX";
        case Pos::PUNCT: return "PUNCT";
        case Pos::OTHER: return "OTHER";
    }
    return "OTHER";
}

// Sentence punctuation recognized by the scope heuristics: {, . : ; ? !}
inline bool is_scope_punct_char(char c) {
    return c == ',' || c == '.' || c == ':' || c == ';' || c == '?' || c == '!';
}

struct Token {
    std::string surface;
    int index = 0;
    Pos pos = Pos::OTHER;
    bool is_stopword = false;
    bool is_punct = false;
};

struct TagResources {
    std::unordered_map<std::string, Pos> lexicon;              // word -> tag, lowercase keys
    std::vector<std::pair<std::string, Pos>> suffix_rules;     // checked in order
    std::unordered_set<std::string> stopwords;
    std::unordered_set<std::string> auxiliaries;               // always tag AUX, never VB

    // Auxiliary membership beats any lexicon entry; drop conflicting rows so the
    // lexicon-first lookup order cannot produce VB for an auxiliary.
    void enforce_aux_priority() {
        for (const auto& a : auxiliaries) lexicon.erase(a);
    }
};

inline std::vector<std::pair<std::string, Pos>> default_suffix_rules() {
    return {
        {"ly", Pos::OTHER}, {"ing", Pos::VB},  {"ed", Pos::VB},
        {"ness", Pos::NN},  {"ment", Pos::NN}, {"tion", Pos::NN},
        {"sion", Pos::NN},  {"ship", Pos::NN}, {"ism", Pos::NN},
        {"ful", Pos::JJ},   {"ous", Pos::JJ},  {"ive", Pos::JJ},
        {"able", Pos::JJ},  {"ible", Pos::JJ}, {"less", Pos::JJ},
        {"est", Pos::JJ},   {"y", Pos::JJ},
    };
}

// Whitespace split, then leading/trailing {, . : ; ? !} characters peel off into
// their own PUNCT tokens. Interior punctuation stays put ("NOT_happy", "x.co").
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    auto push = [&out](std::string s, bool punct) {
        Token t;
        t.surface = std::move(s);
        t.index = static_cast<int>(out.size());
        t.is_punct = punct;
        t.pos = punct ? Pos::PUNCT : Pos::OTHER;
        out.push_back(std::move(t));
    };
    for (const std::string& chunk : split_ws(text)) {
        std::size_t b = 0, e = chunk.size();
        while (b < e && is_scope_punct_char(chunk[b])) {
            push(std::string(1, chunk[b]), true);
            ++b;
        }
        std::size_t core_end = e;
        while (core_end > b && is_scope_punct_char(chunk[core_end - 1])) --core_end;
        if (core_end > b) push(chunk.substr(b, core_end - b), false);
        for (std::size_t i = core_end; i < e; ++i) push(std::string(1, chunk[i]), true);
    }
    return out;
}

inline Pos tag_word(const std::string& lower, const TagResources& res) {
    if (auto it = res.lexicon.find(lower); it != res.lexicon.end()) return it->second;
    if (res.auxiliaries.count(lower)) return Pos::AUX;
    for (const auto& [suffix, pos] : res.suffix_rules) {
        // require a stem of at least two characters so the rule never eats the word
        if (lower.size() >= suffix.size() + 2 &&
            lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) == 0) {
            return pos;
        }
    }
    return Pos::OTHER;
}

inline std::vector<Token> tag_pos(std::vector<Token> tokens, const TagResources& res) {
    for (Token& t : tokens) {
        if (t.is_punct) {
            t.pos = Pos::PUNCT;
            t.is_stopword = false;
            continue;
        }
        std::string lower = to_lower(t.surface);
        t.pos = tag_word(lower, res);
        t.is_stopword = res.stopwords.count(lower) > 0;
    }
    return tokens;
}

// Plain single-space join; the canonical text form of a token stream.
inline std::string join(const std::vector<Token>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i].surface;
    }
    return out;
}

// Join with punctuation re-attached to the preceding token; used by the
// tokenizer reversibility check.
inline std::string join_attach_punct(const std::vector<Token>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i && !tokens[i].is_punct) out += ' ';
        out += tokens[i].surface;
    }
    return out;
}

}  // namespace dacts::nlp
