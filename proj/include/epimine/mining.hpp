#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epimine/candgen.hpp"
#include "epimine/counting.hpp"
#include "epimine/episode.hpp"
#include "epimine/event_model.hpp"

namespace epimine {

/// The four stock duration buckets: [1-120], [121-600], [601-1800], >1800.
/// Zero-duration events fall in no bucket (the prefilter normally drops
/// them anyway).
std::vector<IntervalSet> standard_buckets();

struct MiningConfig {
    enum class Mode { plain, generalized };

    Mode mode = Mode::plain;
    /// Duration buckets for generalized mode; ignored in plain mode.
    std::vector<IntervalSet> buckets = standard_buckets();
    ExpiryPolicy expiry;
    /// Fixed frequency threshold. When absent, each level n uses
    /// auto_threshold(T, M_effective, n), where M_effective multiplies the
    /// alphabet size by the bucket count in generalized mode.
    std::optional<std::int64_t> threshold;
    /// Largest episode size to mine (>= 1).
    std::size_t max_size = 3;
    /// Acceptable probability that a trend is noise rather than signal;
    /// purely informational, recorded with the run's parameters.
    double error_prob = 0.5;
    /// Structural restriction applied while generating candidates; must be
    /// hereditary (see CandidateFilter).
    CandidateFilter candidate_filter;
    /// Threads used for counting each level's candidates.
    unsigned workers = 1;
};

/// Rule-of-thumb frequency threshold: an event type firing uniformly would
/// show up about T / M times, so an episode of size N is interesting once
/// it reaches a 1/N-th of that; never below 1. Computed as
/// max(1, ceil(T / (M * N))). Throws std::invalid_argument if M or N < 1.
std::int64_t auto_threshold(std::int64_t total_events, std::int64_t alphabet_size, std::int64_t episode_size);

/// Levelwise episode discovery: seed level 1 from the histogram, then
/// alternate candidate generation and counting until a level comes up
/// empty or max_size is reached. Returns every frequent episode found,
/// smaller sizes first, canonically sorted within a size.
std::vector<FrequentEpisode> mine(const EventSequence& seq, const MiningConfig& cfg);

}  // namespace epimine
