// Feature extraction: TFIDF unigrams over transformed text plus emotion,
// sentiment, high-level, and dialogue blocks in a fixed layout.
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dacts/lexicons.hpp"
#include "dacts/negation.hpp"
#include "dacts/nlp.hpp"
#include "dacts/normalizer.hpp"
#include "dacts/util.hpp"

namespace dacts::features {

struct SparseVector {
    std::vector<std::pair<int, double>> entries;  // ascending index order
    int width = 0;

    void push(int index, double value) {
        if (value != 0.0) entries.emplace_back(index, value);
    }
    double dot_dense(const std::vector<double>& w) const {
        double s = 0;
        for (const auto& [i, v] : entries) s += w[static_cast<std::size_t>(i)] * v;
        return s;
    }
    double norm2() const {
        double s = 0;
        for (const auto& [i, v] : entries) s += v * v;
        return std::sqrt(s);
    }
};

// TFIDF terms: word tokens of the transformed text, lowercased except that a
// NOT_ scope marker is preserved, so "happy" and "NOT_happy" stay distinct
// vocabulary entries.
inline std::vector<std::string> tfidf_terms(const std::string& text) {
    std::vector<std::string> terms;
    for (const nlp::Token& t : nlp::tokenize(text)) {
        if (t.is_punct) continue;
        if (has_not_prefix(t.surface)) {
            terms.push_back(t.surface);
        } else {
            terms.push_back(to_lower(t.surface));
        }
    }
    return terms;
}

struct VectorizerModel {
    std::map<std::string, int> vocabulary;  // term -> column, lexicographic order
    std::vector<double> idf;                // by column
    int min_count = 2;

    int size() const { return static_cast<int>(vocabulary.size()); }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        std::vector<const std::string*> by_col(vocabulary.size());
        for (const auto& [term, col] : vocabulary) by_col[static_cast<std::size_t>(col)] = &term;
        for (std::size_t c = 0; c < by_col.size(); ++c) {
            terms.push_back({*by_col[c], idf[c]});
        }
        return {{"min_count", min_count}, {"terms", std::move(terms)}};
    }

    static VectorizerModel from_json(const nlohmann::json& j) {
        VectorizerModel m;
        m.min_count = j.at("min_count").get<int>();
        int col = 0;
        for (const auto& row : j.at("terms")) {
            m.vocabulary[row.at(0).get<std::string>()] = col++;
            m.idf.push_back(row.at(1).get<double>());
        }
        return m;
    }

    std::vector<std::string> terms_in_order() const {
        std::vector<std::string> out(vocabulary.size());
        for (const auto& [term, col] : vocabulary) out[static_cast<std::size_t>(col)] = term;
        return out;
    }
};

// Vocabulary keeps unigrams whose corpus-total frequency reaches min_count.
// idf(t) = ln((1+N)/(1+df(t))) + 1 with N documents.
inline VectorizerModel fit_tfidf(const std::vector<std::string>& texts, int min_count = 2) {
    if (texts.empty()) throw std::invalid_argument("fit_tfidf: empty corpus");
    std::map<std::string, int> total;
    std::map<std::string, int> df;
    for (const std::string& text : texts) {
        std::map<std::string, int> seen;
        for (const std::string& term : tfidf_terms(text)) {
            total[term] += 1;
            seen[term] += 1;
        }
        for (const auto& [term, n] : seen) df[term] += 1;
    }
    VectorizerModel m;
    m.min_count = min_count;
    int col = 0;
    double n_docs = static_cast<double>(texts.size());
    for (const auto& [term, n] : total) {  // std::map iteration = lexicographic columns
        if (n < min_count) continue;
        m.vocabulary[term] = col++;
        m.idf.push_back(std::log((1.0 + n_docs) / (1.0 + df[term])) + 1.0);
    }
    if (m.vocabulary.empty()) {
        throw std::invalid_argument("fit_tfidf: no term reaches min_count " +
                                    std::to_string(min_count));
    }
    return m;
}

// tf * idf, L2-normalized; out-of-vocabulary terms ignored.
inline SparseVector tfidf_vector(const VectorizerModel& m, const std::string& text) {
    std::map<int, double> tf;
    for (const std::string& term : tfidf_terms(text)) {
        auto it = m.vocabulary.find(term);
        if (it != m.vocabulary.end()) tf[it->second] += 1.0;
    }
    SparseVector v;
    v.width = m.size();
    double norm = 0;
    for (auto& [col, count] : tf) {
        count *= m.idf[static_cast<std::size_t>(col)];
        norm += count * count;
    }
    norm = std::sqrt(norm);
    for (const auto& [col, value] : tf) {
        v.push(col, norm > 0 ? value / norm : 0.0);
    }
    return v;
}

// Count of word tokens per emotion class, NOT_ prefixes stripped.
inline std::array<double, 8> emotion_counts(const std::vector<nlp::Token>& tokens,
                                            const lexicons::EmotionLexicon& emo) {
    std::array<double, 8> counts{};
    for (const nlp::Token& t : tokens) {
        if (t.is_punct) continue;
        std::string word = to_lower(std::string(strip_not_prefix(t.surface)));
        std::uint8_t mask = emo.classes(word);
        for (int c = 0; c < 8; ++c) {
            if (mask & (1u << c)) counts[static_cast<std::size_t>(c)] += 1.0;
        }
    }
    return counts;
}

namespace detail {

struct Aggregate {
    double min = 0, max = 0, avg = 0, sum = 0;
    int n = 0;

    void add(double v) {
        if (n == 0) {
            min = max = v;
        } else {
            if (v < min) min = v;
            if (v > max) max = v;
        }
        sum += v;
        ++n;
        avg = sum / n;
    }
    void append_to(std::vector<double>& out) const {
        out.push_back(min);
        out.push_back(max);
        out.push_back(avg);
        out.push_back(sum);
    }
};

}  // namespace detail

// Per sentiment lexicon: 16 aggregates over {in-scope, out-of-scope} x
// {positive, negative} x {min, max, avg, sum}, then one last-word score per
// lexicon. Empty groups emit zeros. In-scope lookups use negated-context scores
// where the lexicon provides them.
inline std::vector<double> sentiment_aggregates(const std::vector<nlp::Token>& tokens,
                                                const std::vector<negation::Scope>& scopes,
                                                const lexicons::LexiconBundle& bundle) {
    std::set<int> in_scope;
    for (const negation::Scope& s : scopes) {
        in_scope.insert(s.token_indices.begin(), s.token_indices.end());
    }
    std::vector<double> out;
    out.reserve(bundle.sentiment.size() * 17);
    for (const lexicons::SentimentLexicon& lex : bundle.sentiment) {
        detail::Aggregate groups[4];  // in+, in-, out+, out-
        for (const nlp::Token& t : tokens) {
            if (t.is_punct) continue;
            std::string word = to_lower(std::string(strip_not_prefix(t.surface)));
            bool scoped = in_scope.count(t.index) > 0;
            auto s = lexicons::score(lex, word, scoped);
            if (!s || *s == 0.0) continue;
            int g = (scoped ? 0 : 2) + (*s > 0 ? 0 : 1);
            groups[g].add(*s);
        }
        for (const detail::Aggregate& g : groups) g.append_to(out);
    }
    // last word token's score per lexicon, 0 when unscored
    const nlp::Token* last = nullptr;
    for (const nlp::Token& t : tokens) {
        if (!t.is_punct) last = &t;
    }
    for (const lexicons::SentimentLexicon& lex : bundle.sentiment) {
        double v = 0;
        if (last) {
            std::string word = to_lower(std::string(strip_not_prefix(last->surface)));
            bool scoped = in_scope.count(last->index) > 0;
            if (auto s = lexicons::score(lex, word, scoped)) v = *s;
        }
        out.push_back(v);
    }
    return out;
}

// f1: any run of two or more ?/! marks. f2: exactly one question mark and no
// run condition on it. f3: count of all-caps words (length >= 2), placeholders
// excluded. Operates on cleaned, case-preserved text.
inline std::array<double, 3> highlevel(const std::string& clean_text) {
    bool run2 = false;
    bool q_in_run2 = false;
    int q_total = 0;
    std::size_t i = 0;
    while (i < clean_text.size()) {
        char c = clean_text[i];
        if (c != '?' && c != '!') {
            ++i;
            continue;
        }
        std::size_t b = i;
        bool has_q = false;
        while (i < clean_text.size() && (clean_text[i] == '?' || clean_text[i] == '!')) {
            if (clean_text[i] == '?') {
                has_q = true;
                ++q_total;
            }
            ++i;
        }
        if (i - b >= 2) {
            run2 = true;
            if (has_q) q_in_run2 = true;
        }
    }
    double f1 = run2 ? 1.0 : 0.0;
    double f2 = (q_total == 1 && !q_in_run2) ? 1.0 : 0.0;
    double f3 = 0;
    for (const nlp::Token& t : nlp::tokenize(clean_text)) {
        if (t.is_punct || t.surface.size() < 2) continue;
        if (t.surface == "URL" || t.surface == "ATUSER" || t.surface == "ENT") continue;
        bool all_upper = true;
        for (char c : t.surface) {
            if (c < 'A' || c > 'Z') {
                all_upper = false;
                break;
            }
        }
        if (all_upper) f3 += 1.0;
    }
    return {f1, f2, f3};
}

struct DialogueLexicons {
    using Entry = std::vector<std::string>;  // multiword entries as token runs
    std::vector<Entry> yesno, wh, opening, closing, thanks_apology;

    static DialogueLexicons defaults();
    static DialogueLexicons from_file(const std::string& path);

    void validate() const {
        if (yesno.empty() || wh.empty() || opening.empty() || closing.empty() ||
            thanks_apology.empty()) {
            throw std::runtime_error("dialogue lexicons must all be non-empty");
        }
    }
};

inline DialogueLexicons DialogueLexicons::defaults() {
    auto entries = [](std::initializer_list<const char*> words) {
        std::vector<Entry> out;
        for (const char* w : words) out.push_back(split_ws(w));
        return out;
    };
    DialogueLexicons dl;
    dl.yesno = entries({"did", "do", "does", "can", "could", "will", "would", "is", "are",
                        "was", "were", "should", "shall", "may", "might", "have", "has",
                        "had", "am"});
    dl.wh = entries({"who", "what", "when", "where", "why", "which", "how", "whose",
                     "whom"});
    dl.opening = entries({"hi", "hello", "greetings", "hey", "good morning",
                          "good afternoon", "good evening"});
    dl.closing = entries({"bye", "goodbye", "farewell", "see you", "take care",
                          "good night"});
    dl.thanks_apology = entries({"sorry", "thanks", "thank you", "thankyou", "apologies",
                                 "apology", "my apologies", "much appreciated"});
    return dl;
}

// Sectioned plain text: [yesno] [wh] [opening] [closing] [thanks_apology], one
// entry per line, '#' comments ignored.
inline DialogueLexicons DialogueLexicons::from_file(const std::string& path) {
    DialogueLexicons dl;
    std::vector<Entry>* current = nullptr;
    for (const std::string& raw : read_lines(path)) {
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            std::string section = line.substr(1, line.size() - 2);
            if (section == "yesno") current = &dl.yesno;
            else if (section == "wh") current = &dl.wh;
            else if (section == "opening") current = &dl.opening;
            else if (section == "closing") current = &dl.closing;
            else if (section == "thanks_apology") current = &dl.thanks_apology;
            else throw std::runtime_error("unknown dialogue section '" + section +
                                          "' in " + path);
            continue;
        }
        if (!current) {
            throw std::runtime_error("dialogue entry before any section in " + path);
        }
        current->push_back(split_ws(to_lower(line)));
    }
    dl.validate();
    return dl;
}

namespace detail {

inline bool entry_matches_at(const std::vector<std::string>& words, std::size_t at,
                             const DialogueLexicons::Entry& entry) {
    if (entry.empty() || at + entry.size() > words.size()) return false;
    for (std::size_t k = 0; k < entry.size(); ++k) {
        if (words[at + k] != entry[k]) return false;
    }
    return true;
}

inline bool any_entry_at(const std::vector<std::string>& words, std::size_t at,
                         const std::vector<DialogueLexicons::Entry>& entries) {
    for (const auto& e : entries) {
        if (entry_matches_at(words, at, e)) return true;
    }
    return false;
}

inline bool any_entry_anywhere(const std::vector<std::string>& words,
                               const std::vector<DialogueLexicons::Entry>& entries) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (any_entry_at(words, i, entries)) return true;
    }
    return false;
}

}  // namespace detail

// b1: starts with a yes-no starter; b2: starts with a wh word; b3..b5: any
// opening greeting / closing greeting / thanks-apology term anywhere.
inline std::array<double, 5> dialogue_indicators(const std::vector<nlp::Token>& tokens,
                                                 const DialogueLexicons& dl) {
    std::vector<std::string> words;
    for (const nlp::Token& t : tokens) {
        if (!t.is_punct) words.push_back(to_lower(t.surface));
    }
    std::array<double, 5> b{};
    if (!words.empty()) {
        b[0] = detail::any_entry_at(words, 0, dl.yesno) ? 1.0 : 0.0;
        b[1] = detail::any_entry_at(words, 0, dl.wh) ? 1.0 : 0.0;
    }
    b[2] = detail::any_entry_anywhere(words, dl.opening) ? 1.0 : 0.0;
    b[3] = detail::any_entry_anywhere(words, dl.closing) ? 1.0 : 0.0;
    b[4] = detail::any_entry_anywhere(words, dl.thanks_apology) ? 1.0 : 0.0;
    return b;
}

// Fixed block layout: TFIDF | emotion(8) | sentiment(16L) | last-word(L) |
// high-level(3) | dialogue(5).
struct FeatureSpace {
    VectorizerModel vectorizer;
    std::vector<std::string> lexicon_names;
    negation::ScopeMethod method;

    int vocab_size() const { return vectorizer.size(); }
    int n_lexicons() const { return static_cast<int>(lexicon_names.size()); }
    int emotion_offset() const { return vocab_size(); }
    int sentiment_offset() const { return vocab_size() + 8; }
    int lastword_offset() const { return sentiment_offset() + 16 * n_lexicons(); }
    int highlevel_offset() const { return lastword_offset() + n_lexicons(); }
    int dialogue_offset() const { return highlevel_offset() + 3; }
    int total_width() const { return dialogue_offset() + 5; }

    nlohmann::json to_json() const {
        return {{"vectorizer", vectorizer.to_json()},
                {"lexicon_names", lexicon_names},
                {"method", method.str()},
                {"total_width", total_width()}};
    }

    static FeatureSpace from_json(const nlohmann::json& j) {
        FeatureSpace s;
        s.vectorizer = VectorizerModel::from_json(j.at("vectorizer"));
        s.lexicon_names = j.at("lexicon_names").get<std::vector<std::string>>();
        auto m = negation::ScopeMethod::parse(j.at("method").get<std::string>());
        if (!m) {
            throw std::runtime_error("unknown scope method in feature space: " +
                                     j.at("method").get<std::string>());
        }
        s.method = *m;
        if (j.contains("total_width") && j.at("total_width").get<int>() != s.total_width()) {
            throw std::runtime_error("feature space width mismatch in model file");
        }
        return s;
    }
};

// Everything the per-utterance pipeline needs, immutable after load.
struct PipelineResources {
    normalizer::SubstitutionTable table;
    normalizer::Gazetteer gazetteer;
    nlp::TagResources tags;
    negation::CueLexicon cues = negation::CueLexicon::standard();
    lexicons::LexiconBundle bundle;
    DialogueLexicons dialogue = DialogueLexicons::defaults();
};

struct Prepared {
    normalizer::CleanText clean;
    std::vector<nlp::Token> tokens;          // tagged, pre-transform
    std::vector<negation::CueMatch> cues;
    std::vector<negation::Scope> scopes;
    std::string transformed;
};

inline Prepared prepare(const std::string& raw, const PipelineResources& res,
                        const negation::ScopeMethod& method) {
    Prepared p;
    p.clean = normalizer::resolve_entities(normalizer::clean_text(raw, res.table),
                                           res.gazetteer);
    p.tokens = nlp::tag_pos(nlp::tokenize(p.clean.text), res.tags);
    p.cues = negation::detect_cues(p.tokens, res.cues);
    if (method.kind == negation::ScopeMethod::Kind::none) {
        p.transformed = nlp::join(p.tokens);
    } else {
        p.scopes = negation::detect_scopes(p.tokens, p.cues, method, res.cues, &res.bundle);
        p.transformed = negation::transform(p.tokens, p.scopes);
    }
    return p;
}

struct Featurizer {
    const PipelineResources* resources = nullptr;
    FeatureSpace space;

    SparseVector assemble(const Prepared& p) const {
        SparseVector v = tfidf_vector(space.vectorizer, p.transformed);
        v.width = space.total_width();
        int at = space.emotion_offset();
        for (double c : emotion_counts(p.tokens, resources->bundle.emotion)) {
            v.push(at++, c);
        }
        for (double c : sentiment_aggregates(p.tokens, p.scopes, resources->bundle)) {
            v.push(at++, c);
        }
        for (double c : highlevel(p.clean.text)) v.push(at++, c);
        for (double c : dialogue_indicators(p.tokens, resources->dialogue)) v.push(at++, c);
        return v;
    }

    SparseVector assemble_text(const std::string& raw) const {
        return assemble(prepare(raw, *resources, space.method));
    }
};

}  // namespace dacts::features
