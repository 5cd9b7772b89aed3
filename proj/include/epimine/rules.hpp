#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "epimine/candgen.hpp"
#include "epimine/counting.hpp"
#include "epimine/episode.hpp"
#include "epimine/event_model.hpp"

namespace epimine {

/// Confidence, in percent, of the rule "subepisode implies episode":
/// 100 * freq(episode) / freq(subepisode). Zero when the subepisode never
/// occurs (freq_sub == 0).
double rule_confidence(std::int64_t freq_episode, std::int64_t freq_sub);

/// Episode frequencies under one fixed sequence and expiry policy. Seeded
/// from a mined result set; anything not in the seed (a subepisode that
/// fell below threshold, say) is counted on demand and memoized. Not
/// thread-safe.
class FrequencyTable {
public:
    FrequencyTable(const std::vector<FrequentEpisode>& seed, const EventSequence& seq, ExpiryPolicy exp);

    std::int64_t frequency(const AnyEpisode& episode);

private:
    const EventSequence& seq_;
    ExpiryPolicy exp_;
    std::map<AnyEpisode, std::int64_t> cache_;
};

struct ScoredEpisode {
    FrequentEpisode base;
    /// drop_confidences[i] is the confidence of "episode without node i
    /// implies episode", one entry per node.
    std::vector<double> drop_confidences;
    double best = 0;   // max over drop_confidences
    double worst = 0;  // min over drop_confidences
};

/// Scores an episode against each of its drop-one-node subepisodes.
/// Throws std::invalid_argument for episodes of fewer than two nodes
/// (they have no proper subepisode to form a rule with).
ScoredEpisode score_episode(const FrequentEpisode& episode, FrequencyTable& freqs);

/// Scores every episode of size >= 2, preserving input order. Single-node
/// episodes are skipped: they carry no rule.
std::vector<ScoredEpisode> score_all(const std::vector<FrequentEpisode>& mined, FrequencyTable& freqs);

/// Keeps episodes with best >= min_best and worst >= min_worst (inclusive),
/// preserving order.
std::vector<ScoredEpisode> filter_by_scores(std::vector<ScoredEpisode> scored, double min_best, double min_worst);

}  // namespace epimine
