#include "epimine/event_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace epimine {

std::optional<EventTypeId> EventSequence::type_id(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::pair<Seconds, Seconds>> EventSequence::span() const {
    if (events_.empty()) return std::nullopt;
    return std::make_pair(events_.front().start, events_.back().start);
}

EventSequence make_sequence(const std::vector<RawEvent>& raw) {
    EventSequence seq;
    seq.events_.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const RawEvent& r = raw[i];
        if (r.end < r.start) {
            throw std::invalid_argument("make_sequence: event " + std::to_string(i) + " (" + r.label +
                                        ") ends before it starts");
        }
        auto [it, inserted] = seq.ids_.try_emplace(r.label, static_cast<EventTypeId>(seq.labels_.size()));
        if (inserted) seq.labels_.push_back(r.label);
        seq.events_.push_back(Event{it->second, r.start, r.end});
    }
    std::stable_sort(seq.events_.begin(), seq.events_.end(),
                     [](const Event& a, const Event& b) { return a.start < b.start; });
    return seq;
}

}  // namespace epimine
