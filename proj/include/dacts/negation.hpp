// Negation cue detection, scope heuristics, and the NOT_ transform.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "dacts/lexicons.hpp"
#include "dacts/nlp.hpp"
#include "dacts/util.hpp"

namespace dacts::negation {

// The 37 explicit negation cues. Apostrophe-free forms; the normalizer folds
// surface apostrophes before these are matched.
struct CueLexicon {
    std::unordered_set<std::string> cues;

    static CueLexicon standard() {
        return CueLexicon{{
            "hardly",  "lack",     "lacking",  "lacks",   "neither", "no",      "nobody",
            "none",    "nothing",  "nowhere",  "cant",    "arent",   "dont",    "doesnt",
            "didnt",   "havent",   "isnt",     "mightnt", "mustnt",  "neednt",  "shouldnt",
            "wasnt",   "werent",   "wouldnt",  "without", "seldom",  "scarcely", "wont",
            "never",   "aint",     "barely",   "nor",     "not",     "hadnt",   "rather",
            "hasnt",   "shant",
        }};
    }

    bool contains(std::string_view lower) const {
        return cues.count(std::string(lower)) > 0;
    }
};

struct CueMatch {
    int token_index = 0;
    std::string cue;  // lowercase form from the lexicon
};

enum class Termination { found, hit_punctuation, hit_another_cue, end_of_text, window };

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::found: return "found";
        case Termination::hit_punctuation: return "hit_punctuation";
        case Termination::hit_another_cue: return "hit_another_cue";
        case Termination::end_of_text: return "end_of_text";
        case Termination::window: return "window";
    }
    return "end_of_text";
}

struct Scope {
    CueMatch cue;
    std::vector<int> token_indices;  // ascending, never the cue or punctuation
    Termination termination = Termination::end_of_text;
};

// Scope heuristic selector. Window carries its before/after widths (0..3).
struct ScopeMethod {
    enum class Kind { none, pos, emotion, window, punct };
    Kind kind = Kind::none;
    int x = 0, y = 0;

    static ScopeMethod none() { return {}; }
    static ScopeMethod pos() { return {Kind::pos, 0, 0}; }
    static ScopeMethod emotion() { return {Kind::emotion, 0, 0}; }
    static ScopeMethod punct() { return {Kind::punct, 0, 0}; }
    static ScopeMethod window(int x, int y) {
        if (x < 0 || x > 3 || y < 0 || y > 3) {
            throw std::invalid_argument("window bounds must be within 0..3, got " +
                                        std::to_string(x) + "," + std::to_string(y));
        }
        return {Kind::window, x, y};
    }

    // Accepts none|pos|emotion|punct|window:X,Y
    static std::optional<ScopeMethod> parse(std::string_view s) {
        if (s == "none") return none();
        if (s == "pos") return pos();
        if (s == "emotion") return emotion();
        if (s == "punct" || s == "punctuation") return punct();
        if (s.substr(0, 7) == "window:") {
            auto rest = s.substr(7);
            auto comma = rest.find(',');
            if (comma == std::string_view::npos) return std::nullopt;
            try {
                int x = std::stoi(std::string(rest.substr(0, comma)));
                int y = std::stoi(std::string(rest.substr(comma + 1)));
                if (x < 0 || x > 3 || y < 0 || y > 3) return std::nullopt;
                return window(x, y);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    std::string str() const {
        switch (kind) {
            case Kind::none: return "none";
            case Kind::pos: return "pos";
            case Kind::emotion: return "emotion";
            case Kind::punct: return "punct";
            case Kind::window:
                return "window:" + std::to_string(x) + "," + std::to_string(y);
        }
        return "none";
    }

    bool operator==(const ScopeMethod&) const = default;
};

inline std::vector<CueMatch> detect_cues(const std::vector<nlp::Token>& tokens,
                                         const CueLexicon& lex) {
    std::vector<CueMatch> out;
    for (const nlp::Token& t : tokens) {
        if (t.is_punct) continue;
        std::string lower = to_lower(t.surface);
        if (lex.contains(lower)) out.push_back({t.index, lower});
    }
    return out;
}

namespace detail {

inline bool is_cue_token(const nlp::Token& t, const CueLexicon& lex) {
    return !t.is_punct && lex.contains(to_lower(t.surface));
}

inline bool claimed_has(const std::set<int>* claimed, int i) {
    return claimed && claimed->count(i) > 0;
}

// Shared forward scan for the pos and emotion heuristics: skip stopwords, stop
// on punctuation or another cue, return the first token matching `accept`.
template <class Accept>
Scope first_match_scan(const std::vector<nlp::Token>& tokens, const CueMatch& cue,
                       const CueLexicon& lex, const std::set<int>* claimed,
                       Accept&& accept) {
    Scope scope;
    scope.cue = cue;
    for (std::size_t i = static_cast<std::size_t>(cue.token_index) + 1; i < tokens.size();
         ++i) {
        const nlp::Token& t = tokens[i];
        if (claimed_has(claimed, t.index)) continue;
        if (t.is_stopword) continue;
        if (t.is_punct) {
            scope.termination = Termination::hit_punctuation;
            return scope;
        }
        if (is_cue_token(t, lex)) {
            scope.termination = Termination::hit_another_cue;
            return scope;
        }
        if (accept(t)) {
            scope.token_indices.push_back(t.index);
            scope.termination = Termination::found;
            return scope;
        }
    }
    scope.termination = Termination::end_of_text;
    return scope;
}

}  // namespace detail

// First noun, adjective, or (non-auxiliary) verb after the cue. Tokens must be
// POS-tagged.
inline Scope scope_pos(const std::vector<nlp::Token>& tokens, const CueMatch& cue,
                       const CueLexicon& lex, const std::set<int>* claimed = nullptr) {
    return detail::first_match_scan(tokens, cue, lex, claimed, [](const nlp::Token& t) {
        return t.pos == nlp::Pos::NN || t.pos == nlp::Pos::JJ || t.pos == nlp::Pos::VB;
    });
}

// First emotional word after the cue, same scan and termination rules.
inline Scope scope_emotion(const std::vector<nlp::Token>& tokens, const CueMatch& cue,
                           const CueLexicon& lex, const lexicons::LexiconBundle& bundle,
                           const std::set<int>* claimed = nullptr) {
    return detail::first_match_scan(tokens, cue, lex, claimed, [&bundle](const nlp::Token& t) {
        return lexicons::is_emotional(bundle, to_lower(t.surface));
    });
}

// Every word token after the cue up to the first punctuation token.
inline Scope scope_punct(const std::vector<nlp::Token>& tokens, const CueMatch& cue,
                         const CueLexicon& lex, const std::set<int>* claimed = nullptr) {
    Scope scope;
    scope.cue = cue;
    scope.termination = Termination::end_of_text;
    for (std::size_t i = static_cast<std::size_t>(cue.token_index) + 1; i < tokens.size();
         ++i) {
        const nlp::Token& t = tokens[i];
        if (t.is_punct) {
            scope.termination = Termination::hit_punctuation;
            break;
        }
        if (detail::is_cue_token(t, lex)) continue;
        if (detail::claimed_has(claimed, t.index)) continue;
        scope.token_indices.push_back(t.index);
    }
    return scope;
}

// Up to x word tokens before and y after each cue, left to right. Punctuation,
// cue tokens, and tokens already claimed by an earlier scope are skipped and do
// not consume window slots.
inline std::vector<Scope> scope_window(const std::vector<nlp::Token>& tokens,
                                       const std::vector<CueMatch>& cues, int x, int y,
                                       const CueLexicon& lex) {
    if (x < 0 || x > 3 || y < 0 || y > 3) {
        throw std::invalid_argument("window bounds must be within 0..3, got " +
                                    std::to_string(x) + "," + std::to_string(y));
    }
    std::vector<Scope> scopes;
    std::set<int> claimed;
    for (const CueMatch& cue : cues) {
        Scope scope;
        scope.cue = cue;
        scope.termination = Termination::window;
        auto eligible = [&](int i) {
            const nlp::Token& t = tokens[static_cast<std::size_t>(i)];
            return !t.is_punct && !detail::is_cue_token(t, lex) && !claimed.count(i);
        };
        int taken = 0;
        for (int i = cue.token_index - 1; i >= 0 && taken < x; --i) {
            if (!eligible(i)) continue;
            scope.token_indices.push_back(i);
            ++taken;
        }
        taken = 0;
        for (int i = cue.token_index + 1;
             i < static_cast<int>(tokens.size()) && taken < y; ++i) {
            if (!eligible(i)) continue;
            scope.token_indices.push_back(i);
            ++taken;
        }
        std::sort(scope.token_indices.begin(), scope.token_indices.end());
        claimed.insert(scope.token_indices.begin(), scope.token_indices.end());
        scopes.push_back(std::move(scope));
    }
    return scopes;
}

// Rewrites every in-scope token to NOT_<lowercase surface>, deletes cues whose
// scope is non-empty, keeps empty-scope cues verbatim, joins with single spaces.
inline std::string transform(const std::vector<nlp::Token>& tokens,
                             const std::vector<Scope>& scopes) {
    std::set<int> in_scope;
    std::set<int> cues_to_drop;
    for (const Scope& s : scopes) {
        for (int i : s.token_indices) {
            if (!in_scope.insert(i).second) {
                throw std::logic_error("overlapping scopes at token index " +
                                       std::to_string(i));
            }
        }
        if (!s.token_indices.empty()) cues_to_drop.insert(s.cue.token_index);
    }
    std::string out;
    for (const nlp::Token& t : tokens) {
        if (cues_to_drop.count(t.index)) continue;
        if (!out.empty()) out += ' ';
        if (in_scope.count(t.index)) {
            out += kNotPrefix;
            out += to_lower(t.surface);
        } else {
            out += t.surface;
        }
    }
    return out;
}

// Detects scopes for every cue under `method`. The pos/emotion/punct heuristics
// resolve cues left to right with tokens claimed by earlier scopes excluded, the
// same bookkeeping the window heuristic uses.
inline std::vector<Scope> detect_scopes(const std::vector<nlp::Token>& tokens,
                                        const std::vector<CueMatch>& cues,
                                        const ScopeMethod& method, const CueLexicon& lex,
                                        const lexicons::LexiconBundle* bundle = nullptr) {
    using Kind = ScopeMethod::Kind;
    if (method.kind == Kind::none) return {};
    if (method.kind == Kind::window) {
        return scope_window(tokens, cues, method.x, method.y, lex);
    }
    if (method.kind == Kind::emotion && bundle == nullptr) {
        throw std::invalid_argument("emotion scope method requires a lexicon bundle");
    }
    std::vector<Scope> scopes;
    std::set<int> claimed;
    for (const CueMatch& cue : cues) {
        Scope s;
        switch (method.kind) {
            case Kind::pos: s = scope_pos(tokens, cue, lex, &claimed); break;
            case Kind::emotion: s = scope_emotion(tokens, cue, lex, *bundle, &claimed); break;
            case Kind::punct: s = scope_punct(tokens, cue, lex, &claimed); break;
            default: break;
        }
        claimed.insert(s.token_indices.begin(), s.token_indices.end());
        scopes.push_back(std::move(s));
    }
    return scopes;
}

struct MethodResult {
    std::vector<Scope> scopes;
    std::string transformed;
};

inline MethodResult apply_method(const std::vector<nlp::Token>& tokens,
                                 const ScopeMethod& method, const CueLexicon& lex,
                                 const lexicons::LexiconBundle* bundle = nullptr) {
    MethodResult result;
    if (method.kind == ScopeMethod::Kind::none) {
        result.transformed = nlp::join(tokens);
        return result;
    }
    std::vector<CueMatch> cues = detect_cues(tokens, lex);
    result.scopes = detect_scopes(tokens, cues, method, lex, bundle);
    result.transformed = transform(tokens, result.scopes);
    return result;
}

}  // namespace dacts::negation
