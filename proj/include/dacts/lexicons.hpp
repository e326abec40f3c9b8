// Sentiment and emotion lexicon loading and word-level queries.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dacts/util.hpp"

namespace dacts::lexicons {

struct SentimentLexicon {
    std::string name;
    std::unordered_map<std::string, double> base;     // word -> score
    std::unordered_map<std::string, double> negated;  // word -> score in negated context

    bool has(const std::string& word) const { return base.count(word) > 0; }
};

// The eight emotion classes, in their canonical order.
inline constexpr std::array<std::string_view, 8> kEmotionClasses = {
    "anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust"};

inline int emotion_class_index(std::string_view name) {
    for (std::size_t i = 0; i < kEmotionClasses.size(); ++i) {
        if (kEmotionClasses[i] == name) return static_cast<int>(i);
    }
    return -1;
}

struct EmotionLexicon {
    std::unordered_map<std::string, std::uint8_t> entries;  // word -> bitmask of classes

    bool has(const std::string& word) const { return entries.count(word) > 0; }
    std::uint8_t classes(const std::string& word) const {
        auto it = entries.find(word);
        return it == entries.end() ? 0 : it->second;
    }
};

struct LexiconBundle {
    std::vector<SentimentLexicon> sentiment;  // order fixes the feature layout
    EmotionLexicon emotion;

    std::vector<std::string> sentiment_names() const {
        std::vector<std::string> names;
        names.reserve(sentiment.size());
        for (const auto& lex : sentiment) names.push_back(lex.name);
        return names;
    }
};

// TSV rows: word<TAB>score or word<TAB>score<TAB>negated_score. Lines starting
// with '#' and blank lines are ignored.
inline SentimentLexicon load_sentiment(const std::string& path, const std::string& name) {
    SentimentLexicon lex;
    lex.name = name;
    std::vector<std::string> lines = read_lines(path);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.empty() || line[0] == '#') continue;
        std::string where = "at " + path + ":" + std::to_string(li + 1);
        std::vector<std::string> cols = split_char(line, '\t');
        if (cols.size() < 2 || cols.size() > 3) {
            throw std::runtime_error("expected 2 or 3 tab-separated columns " + where);
        }
        std::string word = to_lower(trim(cols[0]));
        if (word.empty()) throw std::runtime_error("empty word " + where);
        if (lex.base.count(word)) {
            throw std::runtime_error("duplicate word '" + word + "' " + where);
        }
        lex.base[word] = parse_double(trim(cols[1]), where);
        if (cols.size() == 3) lex.negated[word] = parse_double(trim(cols[2]), where);
    }
    return lex;
}

// TSV rows: word<TAB>emotion, one row per (word, emotion) pair.
inline EmotionLexicon load_emotion(const std::string& path) {
    EmotionLexicon lex;
    std::vector<std::string> lines = read_lines(path);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.empty() || line[0] == '#') continue;
        std::string where = "at " + path + ":" + std::to_string(li + 1);
        std::vector<std::string> cols = split_char(line, '\t');
        if (cols.size() != 2) {
            throw std::runtime_error("expected 2 tab-separated columns " + where);
        }
        std::string word = to_lower(trim(cols[0]));
        int cls = emotion_class_index(to_lower(trim(cols[1])));
        if (word.empty()) throw std::runtime_error("empty word " + where);
        if (cls < 0) {
            throw std::runtime_error("unknown emotion class '" + cols[1] + "' " + where);
        }
        lex.entries[word] |= static_cast<std::uint8_t>(1u << cls);
    }
    return lex;
}

// Word must be lowercase with any NOT_ prefix already stripped by the caller.
inline std::optional<double> score(const SentimentLexicon& lex, const std::string& word,
                                   bool in_negation_scope) {
    if (in_negation_scope) {
        if (auto it = lex.negated.find(word); it != lex.negated.end()) return it->second;
    }
    if (auto it = lex.base.find(word); it != lex.base.end()) return it->second;
    return std::nullopt;
}

// Emotional means: an emotion-lexicon entry, or a nonzero base score in any
// sentiment lexicon.
inline bool is_emotional(const LexiconBundle& bundle, const std::string& word) {
    if (bundle.emotion.has(word)) return true;
    for (const SentimentLexicon& lex : bundle.sentiment) {
        if (auto it = lex.base.find(word); it != lex.base.end() && it->second != 0.0) {
            return true;
        }
    }
    return false;
}

}  // namespace dacts::lexicons
