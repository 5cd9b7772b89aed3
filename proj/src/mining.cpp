#include "epimine/mining.hpp"

#include <stdexcept>

namespace epimine {

std::vector<IntervalSet> standard_buckets() {
    return {
        IntervalSet({Interval{1, 120}}),
        IntervalSet({Interval{121, 600}}),
        IntervalSet({Interval{601, 1800}}),
        IntervalSet({Interval{1801, Interval::kUnbounded}}),
    };
}

std::int64_t auto_threshold(std::int64_t total_events, std::int64_t alphabet_size, std::int64_t episode_size) {
    if (alphabet_size < 1) throw std::invalid_argument("auto_threshold needs a nonempty alphabet");
    if (episode_size < 1) throw std::invalid_argument("auto_threshold needs an episode size of at least 1");
    const std::int64_t denom = alphabet_size * episode_size;
    const std::int64_t ceil_div = (total_events + denom - 1) / denom;
    return std::max<std::int64_t>(1, ceil_div);
}

std::vector<FrequentEpisode> mine(const EventSequence& seq, const MiningConfig& cfg) {
    if (cfg.max_size < 1) throw std::invalid_argument("max_size must be at least 1");
    const bool generalized = cfg.mode == MiningConfig::Mode::generalized;
    if (generalized && cfg.buckets.empty()) throw std::invalid_argument("generalized mining needs duration buckets");

    const auto total = static_cast<std::int64_t>(seq.size());
    const auto effective_alphabet =
        static_cast<std::int64_t>(seq.alphabet_size() * (generalized ? cfg.buckets.size() : 1));
    auto threshold_for = [&](std::size_t n) {
        if (cfg.threshold) return *cfg.threshold;
        return auto_threshold(total, std::max<std::int64_t>(effective_alphabet, 1), static_cast<std::int64_t>(n));
    };

    std::vector<FrequentEpisode> all;
    Level level = seed_level_one(seq, threshold_for(1), generalized ? cfg.buckets : std::vector<IntervalSet>{});
    all.insert(all.end(), level.frequent.begin(), level.frequent.end());

    for (std::size_t n = 2; n <= cfg.max_size && !level.frequent.empty(); ++n) {
        std::vector<AnyEpisode> candidates = generate_candidates(level, cfg.candidate_filter);
        if (candidates.empty()) break;
        std::vector<std::int64_t> counts = count_batch(seq, candidates, cfg.expiry, cfg.workers);
        const std::int64_t threshold = threshold_for(n);
        std::vector<FrequentEpisode> frequent;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (counts[i] >= threshold) frequent.push_back(FrequentEpisode{std::move(candidates[i]), counts[i]});
        }
        level = Level{n, std::move(frequent)};  // candidates were generated sorted
        all.insert(all.end(), level.frequent.begin(), level.frequent.end());
    }
    return all;
}

}  // namespace epimine
