// Labeled utterance corpora: the 12-act label set, JSONL persistence, stats.
#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dacts/negation.hpp"
#include "dacts/nlp.hpp"
#include "dacts/normalizer.hpp"
#include "dacts/util.hpp"

namespace dacts::corpus {

enum class ActLabel {
    statement_info,
    request_info,
    statement_complaint,
    question_yesno,
    statement_expressive_negative,
    statement_suggestion,
    answer_other,
    socialact_thanks,
    question_wh,
    statement_offer,
    question_open,
    socialact_apology,
};

inline constexpr int kNumActs = 12;

inline constexpr std::array<ActLabel, kNumActs> kAllActs = {
    ActLabel::statement_info,       ActLabel::request_info,
    ActLabel::statement_complaint,  ActLabel::question_yesno,
    ActLabel::statement_expressive_negative,
    ActLabel::statement_suggestion, ActLabel::answer_other,
    ActLabel::socialact_thanks,     ActLabel::question_wh,
    ActLabel::statement_offer,      ActLabel::question_open,
    ActLabel::socialact_apology,
};

inline const char* to_string(ActLabel a) {
    switch (a) {
        case ActLabel::statement_info: return "statement_info";
        case ActLabel::request_info: return "request_info";
        case ActLabel::statement_complaint: return "statement_complaint";
        case ActLabel::question_yesno: return "question_yesno";
        case ActLabel::statement_expressive_negative:
            return "statement_expressive_negative";
        case ActLabel::statement_suggestion: return "statement_suggestion";
        case ActLabel::answer_other: return "answer_other";
        case ActLabel::socialact_thanks: return "socialact_thanks";
        case ActLabel::question_wh: return "question_wh";
        case ActLabel::statement_offer: return "statement_offer";
        case ActLabel::question_open: return "question_open";
        case ActLabel::socialact_apology: return "socialact_apology";
    }
    return "statement_info";
}

inline std::optional<ActLabel> parse_act(std::string_view s) {
    for (ActLabel a : kAllActs) {
        if (s == to_string(a)) return a;
    }
    return std::nullopt;
}

using ActSet = std::set<ActLabel>;

struct Utterance {
    std::string id;
    std::string text;
    ActSet acts;  // empty means prediction-only input

    bool operator==(const Utterance&) const = default;
};

struct Corpus {
    std::string name;
    std::vector<Utterance> utterances;

    std::size_t size() const { return utterances.size(); }
};

// One JSON object per line: {"id": ..., "text": ..., "acts": [...]}.
inline Corpus load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    Corpus c;
    c.name = std::filesystem::path(path).stem().string();
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        std::string where = "at line " + std::to_string(lineno);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("malformed JSON " + where + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text") ||
            !j["id"].is_string() || !j["text"].is_string()) {
            throw std::runtime_error("expected object with string id and text " + where);
        }
        Utterance u;
        u.id = j["id"].get<std::string>();
        u.text = j["text"].get<std::string>();
        if (u.id.empty()) throw std::runtime_error("empty id " + where);
        if (u.text.empty()) throw std::runtime_error("empty text " + where);
        if (!seen_ids.insert(u.id).second) {
            throw std::runtime_error("duplicate id '" + u.id + "' " + where);
        }
        if (j.contains("acts")) {
            if (!j["acts"].is_array()) {
                throw std::runtime_error("acts must be an array " + where);
            }
            for (const auto& a : j["acts"]) {
                if (!a.is_string()) {
                    throw std::runtime_error("acts entries must be strings " + where);
                }
                std::string s = a.get<std::string>();
                auto act = parse_act(s);
                if (!act) {
                    throw std::runtime_error("unknown act '" + s + "' " + where);
                }
                u.acts.insert(*act);
            }
        }
        c.utterances.push_back(std::move(u));
    }
    return c;
}

inline std::string to_jsonl_line(const Utterance& u) {
    nlohmann::json j;
    j["id"] = u.id;
    j["text"] = u.text;
    nlohmann::json acts = nlohmann::json::array();
    for (ActLabel a : u.acts) acts.push_back(to_string(a));
    j["acts"] = std::move(acts);
    return j.dump();
}

inline void save_jsonl(const Corpus& c, const std::string& path) {
    std::ostringstream out;
    for (const Utterance& u : c.utterances) out << to_jsonl_line(u) << '\n';
    write_file(path, out.str());
}

struct StatsReport {
    std::map<int, int> cue_count_hist;                        // cues per utterance -> n
    std::vector<std::pair<std::string, int>> top_combinations;  // act combo -> n
    std::map<std::string, int> per_act;                       // act name -> n
    int total = 0;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["total"] = total;
        nlohmann::json hist = nlohmann::json::object();
        for (const auto& [k, v] : cue_count_hist) hist[std::to_string(k)] = v;
        j["cue_count_histogram"] = std::move(hist);
        nlohmann::json combos = nlohmann::json::array();
        for (const auto& [combo, n] : top_combinations) {
            combos.push_back({{"acts", combo}, {"count", n}});
        }
        j["top_combinations"] = std::move(combos);
        j["per_act"] = per_act;
        return j;
    }

    std::string to_table() const {
        std::ostringstream os;
        os << "utterances: " << total << "\n\ncues/utterance  count\n";
        for (const auto& [k, v] : cue_count_hist) {
            os << "  " << k << "\t" << v << "\n";
        }
        os << "\nact  count\n";
        for (const auto& [a, n] : per_act) os << "  " << a << "\t" << n << "\n";
        os << "\ntop label combinations\n";
        for (const auto& [combo, n] : top_combinations) {
            os << "  " << combo << "\t" << n << "\n";
        }
        return os.str();
    }
};

inline std::string combo_key(const ActSet& acts) {
    if (acts.empty()) return "(none)";
    std::vector<std::string> names;
    for (ActLabel a : acts) names.emplace_back(to_string(a));
    return join_strings(names, "+");
}

// Cue counting runs the cleanup pipeline with an empty substitution table so
// apostrophized forms (don't -> dont) still match the cue lexicon.
inline StatsReport corpus_stats(const Corpus& c, const negation::CueLexicon& lex,
                                int top_k) {
    StatsReport report;
    report.total = static_cast<int>(c.size());
    std::map<std::string, int> combos;
    normalizer::SubstitutionTable empty_table;
    for (const Utterance& u : c.utterances) {
        auto clean = normalizer::clean_text(u.text, empty_table);
        auto tokens = nlp::tokenize(clean.text);
        int n_cues = static_cast<int>(negation::detect_cues(tokens, lex).size());
        report.cue_count_hist[n_cues] += 1;
        combos[combo_key(u.acts)] += 1;
        for (ActLabel a : u.acts) report.per_act[to_string(a)] += 1;
    }
    std::vector<std::pair<std::string, int>> ranked(combos.begin(), combos.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (static_cast<int>(ranked.size()) > top_k) ranked.resize(static_cast<std::size_t>(top_k));
    report.top_combinations = std::move(ranked);
    return report;
}

}  // namespace dacts::corpus
