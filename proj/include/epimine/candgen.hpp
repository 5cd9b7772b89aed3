#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "epimine/episode.hpp"
#include "epimine/event_model.hpp"

namespace epimine {

struct FrequentEpisode {
    AnyEpisode episode;
    std::int64_t frequency = 0;

    std::size_t size() const { return episode_size(episode); }
};

/// All frequent episodes of one size, canonically sorted (lexicographic by
/// node sequence) with no duplicates.
struct Level {
    std::size_t n = 0;
    std::vector<FrequentEpisode> frequent;
};

/// Structural restriction hook for candidate generation; return false to
/// drop a candidate before it is ever counted. Only hereditary predicates
/// (true for an episode implies true for all its subepisodes) are safe
/// here — anything else would starve the levels above of building blocks.
using CandidateFilter = std::function<bool(const AnyEpisode&)>;

/// Level 1 by histogram: one pass over the sequence counting each event
/// type (plain mode, empty `buckets`) or each type x duration-bucket pair
/// (generalized mode). Types/pairs with count >= threshold become the
/// single-node frequent episodes.
Level seed_level_one(const EventSequence& seq, std::int64_t threshold, const std::vector<IntervalSet>& buckets = {});

/// Candidates of size n+1 from the frequent episodes of size n: join every
/// pair whose (n-1)-suffix matches the other's (n-1)-prefix (self-joins
/// included), then keep only candidates all of whose drop-one-node
/// subepisodes are frequent at level n. Output is deduplicated and
/// canonically sorted. Throws std::invalid_argument on mixed sizes or
/// mixed plain/duration-aware members.
std::vector<AnyEpisode> generate_candidates(const Level& level, const CandidateFilter& keep = {});

}  // namespace epimine
