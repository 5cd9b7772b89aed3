#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "epimine/counting.hpp"
#include "epimine/episode.hpp"
#include "epimine/event_model.hpp"

namespace epimine::test {

/// Scratch directory, unique per instance, removed on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static std::atomic<int> counter{0};
        path = std::filesystem::temp_directory_path() /
               ("epimine_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        const std::filesystem::path p = path / name;
        std::ofstream out(p);
        out << content;
        return p;
    }
};

/// The worked sequence used throughout the unit tests:
/// (A,3) (D,4) (B,5) (C,9) (E,12) (A,14) (F,15) (B,18) (D,19) (C,27),
/// all events instantaneous. A -> B -> C occurs four times in it; at most
/// two of those occurrences are non-overlapped.
inline EventSequence worked_sequence() {
    return make_sequence({
        {"A", 3, 3},
        {"D", 4, 4},
        {"B", 5, 5},
        {"C", 9, 9},
        {"E", 12, 12},
        {"A", 14, 14},
        {"F", 15, 15},
        {"B", 18, 18},
        {"D", 19, 19},
        {"C", 27, 27},
    });
}

inline Episode plain(std::initializer_list<const char*> labels) {
    Episode e;
    for (const char* l : labels) e.nodes.emplace_back(l);
    return e;
}

struct RandomSequenceSpec {
    std::size_t max_events = 40;
    int alphabet = 4;           // labels "T0".."T{alphabet-1}"
    Seconds max_gap = 10;       // between consecutive starts
    Seconds max_duration = 20;
    bool overlap_free = false;  // next event starts only after the previous ended
};

/// Random event sequence; with overlap_free the events are pairwise
/// non-overlapping in time (each starts strictly after the previous ended).
inline EventSequence random_sequence(std::mt19937& rng, const RandomSequenceSpec& spec = {}) {
    std::uniform_int_distribution<std::size_t> n_events(0, spec.max_events);
    std::uniform_int_distribution<int> type(0, spec.alphabet - 1);
    std::uniform_int_distribution<Seconds> gap(0, spec.max_gap);
    std::uniform_int_distribution<Seconds> duration(0, spec.max_duration);
    std::vector<RawEvent> raw;
    Seconds t = 0;
    const std::size_t n = n_events(rng);
    for (std::size_t i = 0; i < n; ++i) {
        t += gap(rng) + (spec.overlap_free ? 1 : 0);
        const Seconds d = duration(rng);
        raw.push_back(RawEvent{"T" + std::to_string(type(rng)), t, t + d});
        if (spec.overlap_free) t += d;
    }
    return make_sequence(raw);
}

inline Episode random_episode(std::mt19937& rng, int alphabet, std::size_t max_nodes = 3) {
    std::uniform_int_distribution<std::size_t> n_nodes(1, max_nodes);
    std::uniform_int_distribution<int> type(0, alphabet - 1);
    Episode e;
    const std::size_t n = n_nodes(rng);
    for (std::size_t i = 0; i < n; ++i) e.nodes.push_back("T" + std::to_string(type(rng)));
    return e;
}

inline ExpiryPolicy random_expiry(std::mt19937& rng, bool allow_end_to_start = true) {
    std::uniform_int_distribution<int> has_limit(0, 2);
    std::uniform_int_distribution<Seconds> limit(1, 60);
    std::uniform_int_distribution<int> mode(0, allow_end_to_start ? 2 : 1);
    ExpiryPolicy exp;
    if (has_limit(rng) > 0) exp.limit = limit(rng);
    switch (mode(rng)) {
        case 0: exp.span_mode = SpanMode::full_span; break;
        case 1: exp.span_mode = SpanMode::start_to_start; break;
        default: exp.span_mode = SpanMode::end_to_start; break;
    }
    return exp;
}

}  // namespace epimine::test
