#include "epimine/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace epimine {

double rule_confidence(std::int64_t freq_episode, std::int64_t freq_sub) {
    if (freq_sub == 0) return 0.0;
    return 100.0 * static_cast<double>(freq_episode) / static_cast<double>(freq_sub);
}

FrequencyTable::FrequencyTable(const std::vector<FrequentEpisode>& seed, const EventSequence& seq, ExpiryPolicy exp)
    : seq_(seq), exp_(exp) {
    for (const FrequentEpisode& f : seed) cache_.emplace(f.episode, f.frequency);
}

std::int64_t FrequencyTable::frequency(const AnyEpisode& episode) {
    auto it = cache_.find(episode);
    if (it != cache_.end()) return it->second;
    const std::int64_t freq = count_any(seq_, episode, exp_).frequency;
    cache_.emplace(episode, freq);
    return freq;
}

ScoredEpisode score_episode(const FrequentEpisode& episode, FrequencyTable& freqs) {
    const std::size_t n = episode.size();
    if (n < 2) throw std::invalid_argument("episode " + episode_text(episode.episode) + " is too small to score");
    ScoredEpisode scored;
    scored.base = episode;
    scored.drop_confidences.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        scored.drop_confidences.push_back(
            rule_confidence(episode.frequency, freqs.frequency(drop_node(episode.episode, i))));
    }
    const auto [lo, hi] = std::minmax_element(scored.drop_confidences.begin(), scored.drop_confidences.end());
    scored.worst = *lo;
    scored.best = *hi;
    return scored;
}

std::vector<ScoredEpisode> score_all(const std::vector<FrequentEpisode>& mined, FrequencyTable& freqs) {
    std::vector<ScoredEpisode> out;
    for (const FrequentEpisode& f : mined) {
        if (f.size() >= 2) out.push_back(score_episode(f, freqs));
    }
    return out;
}

std::vector<ScoredEpisode> filter_by_scores(std::vector<ScoredEpisode> scored, double min_best, double min_worst) {
    std::erase_if(scored, [&](const ScoredEpisode& s) { return s.best < min_best || s.worst < min_worst; });
    return scored;
}

}  // namespace epimine
