#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace epimine {

/// Timestamps and durations are integer seconds (fault logs have 1-second
/// resolution); no sub-second support.
using Seconds = std::int64_t;

/// Dense index into a sequence's alphabet, 0..M-1.
using EventTypeId = std::int32_t;

struct EventType {
    EventTypeId id = 0;
    std::string label;
};

/// A single fault event. An instantaneous event has end == start.
struct Event {
    EventTypeId type = 0;
    Seconds start = 0;
    Seconds end = 0;

    friend bool operator==(const Event&, const Event&) = default;
};

/// Duration of an event in seconds (end - start).
inline Seconds dwelling_time(const Event& e) { return e.end - e.start; }

/// Input row for make_sequence, before the alphabet is interned.
struct RawEvent {
    std::string label;
    Seconds start = 0;
    Seconds end = 0;
};

/// A time-ordered event sequence over a finite alphabet.
///
/// Immutable after construction; safe to share read-only across workers.
/// Build one with make_sequence().
class EventSequence {
public:
    EventSequence() = default;

    const std::vector<Event>& events() const { return events_; }

    /// Alphabet labels indexed by EventTypeId.
    const std::vector<std::string>& alphabet() const { return labels_; }

    /// Number of events (the length T of the stream).
    std::size_t size() const { return events_.size(); }

    /// Alphabet size M.
    std::size_t alphabet_size() const { return labels_.size(); }

    bool empty() const { return events_.empty(); }

    const std::string& label(EventTypeId id) const { return labels_.at(static_cast<std::size_t>(id)); }

    std::optional<EventTypeId> type_id(std::string_view label) const;

    /// (start of first event, start of last event); nullopt for an empty
    /// sequence.
    std::optional<std::pair<Seconds, Seconds>> span() const;

private:
    friend EventSequence make_sequence(const std::vector<RawEvent>& raw);

    std::vector<Event> events_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, EventTypeId> ids_;
};

/// Builds a sequence from raw (label, start, end) rows.
///
/// The alphabet is formed from distinct labels in first-appearance order;
/// events are stably sorted by start time, so simultaneous events keep
/// their input order. Throws std::invalid_argument naming the offending
/// index if any row has end < start.
EventSequence make_sequence(const std::vector<RawEvent>& raw);

}  // namespace epimine
