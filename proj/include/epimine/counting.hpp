#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epimine/episode.hpp"
#include "epimine/event_model.hpp"

namespace epimine {

/// How the span of an occurrence is measured against the expiry limit.
///
/// start_to_start / full_span: last event's start minus first event's start.
/// end_to_start: last event's start minus first event's end, so the clock
/// only runs once the first fault is resolved. On instantaneous events all
/// three coincide.
enum class SpanMode { start_to_start, end_to_start, full_span };

/// Optional upper bound on occurrence span. No limit accepts everything.
struct ExpiryPolicy {
    std::optional<Seconds> limit;  // > 0 when present
    SpanMode span_mode = SpanMode::full_span;

    /// The instant the span clock starts for an occurrence whose first
    /// event is `first`.
    Seconds anchor(const Event& first) const {
        return span_mode == SpanMode::end_to_start ? first.end : first.start;
    }

    bool satisfies(Seconds first_anchor, Seconds last_start) const {
        return !limit.has_value() || last_start - first_anchor <= *limit;
    }
};

struct CountResult {
    std::int64_t frequency = 0;
    /// The counted occurrences as event indices, one vector per occurrence,
    /// in completion order. Filled only when requested.
    std::vector<std::vector<std::size_t>> occurrences;
};

/// Maximum number of non-overlapped occurrences of the episode, by a single
/// left-to-right pass. Occurrences whose span exceeds the expiry limit are
/// not counted. An episode mentioning a label outside the sequence's
/// alphabet has frequency 0. Throws std::invalid_argument on an empty
/// episode.
CountResult count_non_overlapped(const EventSequence& seq, const Episode& alpha, const ExpiryPolicy& exp = {},
                                 bool collect_occurrences = false);

/// Same, for duration-aware episodes: an event matches a node only if its
/// dwelling time falls in the node's interval set.
CountResult count_generalized(const EventSequence& seq, const GeneralizedEpisode& alpha, const ExpiryPolicy& exp = {},
                              bool collect_occurrences = false);

CountResult count_any(const EventSequence& seq, const AnyEpisode& alpha, const ExpiryPolicy& exp = {},
                      bool collect_occurrences = false);

/// Number of width-second sliding windows (closed, stepped by one second)
/// that contain at least one occurrence of the episode. Windows are the
/// positions [ts, ts + width - 1] for ts in [first_start - width + 1,
/// last_start]; an event lies in a window iff its start does. Kept as a
/// reference counter; throws std::invalid_argument if width < 1.
std::int64_t count_windows(const EventSequence& seq, const Episode& alpha, Seconds width);

/// Frequencies for a batch of candidates, optionally fanned out over
/// `workers` threads (each candidate gets its own read-only pass). The
/// result order matches the candidate order regardless of worker count.
std::vector<std::int64_t> count_batch(const EventSequence& seq, const std::vector<AnyEpisode>& candidates,
                                      const ExpiryPolicy& exp = {}, unsigned workers = 1);

inline constexpr std::size_t kDefaultEnumerationBudget = 4'000'000;

/// Brute-force enumeration of every occurrence (all strictly increasing
/// index tuples matching the episode and satisfying the expiry limit), in
/// lexicographic index order. Desk-scale reference implementation; throws
/// std::length_error once the search visits more than `budget` events.
std::vector<std::vector<std::size_t>> enumerate_occurrences(const EventSequence& seq, const AnyEpisode& alpha,
                                                            const ExpiryPolicy& exp = {},
                                                            std::size_t budget = kDefaultEnumerationBudget);

/// Reference value for count_*: maximum set of pairwise non-overlapped
/// occurrences, chosen greedily by earliest end index over the full
/// enumeration.
std::int64_t max_non_overlapped_reference(const EventSequence& seq, const AnyEpisode& alpha,
                                          const ExpiryPolicy& exp = {},
                                          std::size_t budget = kDefaultEnumerationBudget);

}  // namespace epimine
