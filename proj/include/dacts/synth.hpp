// Synthetic planted-signal corpus generator. Labels are decided by which key
// word sits inside a negation scope. The scoped word lands 1 before, 1 after,
// or 2 after its cue, and the partner act's key word sits just outside a -1/+2
// reach, so that exact window recovers every signal and wider windows start
// swallowing the wrong key word.
#pragma once

#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dacts/corpus.hpp"
#include "dacts/util.hpp"

namespace dacts::corpus {

struct PlantSpec {
    double cue_fraction = 1.0;           // fraction of utterances with a planted cue
    double extra_cue_fraction = 0.15;    // fraction with a second cue in the tail
    double rare_fraction = 0.2;          // fraction carrying a rare reference token
    double trailing_punct_fraction = 0.5;
    int rare_pool = 60;                  // distinct rare tokens, each emitted twice
};

struct PlantedCue {
    int token_index = 0;
    std::string cue;
    std::optional<int> key_index;  // the signal word this cue negates, if any
};

struct SynthTruth {
    // parallel to corpus order
    std::vector<std::vector<PlantedCue>> cues;

    int cue_count(std::size_t utterance) const {
        return static_cast<int>(cues[utterance].size());
    }
};

struct SynthResult {
    Corpus corpus;
    SynthTruth truth;
};

namespace detail {

struct ActPlan {
    ActLabel act;
    std::string signal;    // the word negated for this act
    std::string counter;   // the pair partner's signal, present un-negated
};

// Six act pairs. Partner acts share the same bag of words; only the negation
// placement tells them apart.
inline const std::array<ActPlan, kNumActs>& act_plans() {
    static const std::array<ActPlan, kNumActs> plans = {{
        {ActLabel::statement_complaint, "happy", "helpful"},
        {ActLabel::socialact_thanks, "helpful", "happy"},
        {ActLabel::statement_info, "working", "available"},
        {ActLabel::request_info, "available", "working"},
        {ActLabel::question_yesno, "resolved", "broken"},
        {ActLabel::question_wh, "broken", "resolved"},
        {ActLabel::statement_expressive_negative, "useful", "friendly"},
        {ActLabel::statement_suggestion, "friendly", "useful"},
        {ActLabel::answer_other, "quick", "stable"},
        {ActLabel::statement_offer, "stable", "quick"},
        {ActLabel::question_open, "reliable", "responsive"},
        {ActLabel::socialact_apology, "responsive", "reliable"},
    }};
    return plans;
}

inline const std::vector<std::string>& filler_pool() {
    static const std::vector<std::string> pool = {
        "the",   "this",  "that",  "my",     "our",  "your",  "team",  "agent",
        "account", "order", "ticket", "phone", "app",  "website", "update", "service",
        "today", "again", "still", "really", "very", "just",  "store", "email",
        "call",  "chat",  "reply", "issue",  "case", "item",  "plan",  "line",
    };
    return pool;
}

inline const std::vector<std::string>& cue_pool() {
    static const std::vector<std::string> pool = {"not", "never", "dont", "isnt", "hardly"};
    return pool;
}

}  // namespace detail

// Deterministic in (seed, n, spec). The truth side table records every planted
// cue with the token index of the word it negates.
inline SynthResult synth_corpus(std::uint64_t seed, int n, const PlantSpec& spec = {}) {
    if (n < kNumActs) {
        throw std::invalid_argument("synth_corpus needs n >= " + std::to_string(kNumActs) +
                                    ", got " + std::to_string(n));
    }
    Rng rng(seed);
    SynthResult result;
    result.corpus.name = "synth-" + std::to_string(seed) + "-" + std::to_string(n);

    // rare reference tokens, each queued exactly twice
    std::vector<std::string> rare_queue;
    for (int i = 0; i < spec.rare_pool; ++i) {
        std::string w = "ref" + std::to_string(10 + i);
        rare_queue.push_back(w);
        rare_queue.push_back(w);
    }
    rng.shuffle(rare_queue);
    std::deque<std::string> rare(rare_queue.begin(), rare_queue.end());

    const auto& fillers = detail::filler_pool();
    const auto& cues = detail::cue_pool();

    for (int i = 0; i < n; ++i) {
        const detail::ActPlan& plan = detail::act_plans()[static_cast<std::size_t>(i) %
                                                          kNumActs];
        std::vector<std::string> words;
        std::vector<PlantedCue> planted;

        bool with_cue = rng.chance(spec.cue_fraction);
        // Emits [cue signal], [cue pad signal], or [signal cue pad pad]; the
        // trailing pads keep later words out of a +2 forward reach.
        auto emit_cluster = [&] {
            if (!with_cue) {
                words.push_back(plan.signal);
                return;
            }
            std::string cue = rng.pick(cues);
            int at = static_cast<int>(words.size());
            int offset_kind = static_cast<int>(rng.below(3));
            if (offset_kind == 0) {
                planted.push_back({at, cue, at + 1});
                words.push_back(cue);
                words.push_back(plan.signal);
            } else if (offset_kind == 1) {
                planted.push_back({at, cue, at + 2});
                words.push_back(cue);
                words.push_back(rng.pick(fillers));
                words.push_back(plan.signal);
            } else {
                planted.push_back({at + 1, cue, at});
                words.push_back(plan.signal);
                words.push_back(cue);
                words.push_back(rng.pick(fillers));
                words.push_back(rng.pick(fillers));
            }
        };

        // Two skeletons, drawn independently of the act so bags stay symmetric:
        // the counter word sits after the cluster or before it. Either way a
        // single filler separates them, putting the counter exactly one step
        // beyond a -1/+2 reach.
        words.push_back(rng.pick(fillers));
        if (rng.chance(0.5)) {
            emit_cluster();
            words.push_back(rng.pick(fillers));
            words.push_back(plan.counter);
        } else {
            words.push_back(plan.counter);
            words.push_back(rng.pick(fillers));
            emit_cluster();
        }

        // tail: filler, optional rare token, filler, optional extra cue
        words.push_back(rng.pick(fillers));
        if (rng.chance(spec.rare_fraction) && !rare.empty()) {
            words.push_back(rare.front());
            rare.pop_front();
        }
        words.push_back(rng.pick(fillers));
        if (rng.chance(spec.extra_cue_fraction)) {
            std::string cue = rng.pick(cues);
            planted.push_back({static_cast<int>(words.size()), cue, std::nullopt});
            words.push_back(cue);
            words.push_back(rng.pick(fillers));
        }

        std::string text = join_strings(words, " ");
        if (rng.chance(spec.trailing_punct_fraction)) text += ".";

        Utterance u;
        u.id = "s" + std::to_string(i + 1);
        u.text = std::move(text);
        u.acts = {plan.act};
        result.corpus.utterances.push_back(std::move(u));
        result.truth.cues.push_back(std::move(planted));
    }
    return result;
}

}  // namespace dacts::corpus
