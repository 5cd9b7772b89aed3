#include "epimine/counting.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <utility>

namespace epimine {
namespace {

/// One episode node resolved against a sequence's alphabet. A null dwell
/// pointer means the node accepts any duration.
struct NodeSpec {
    EventTypeId type = 0;
    const IntervalSet* dwell = nullptr;

    bool matches(const Event& e) const {
        return e.type == type && (dwell == nullptr || dwell->contains(dwelling_time(e)));
    }
};

std::optional<std::vector<NodeSpec>> resolve(const EventSequence& seq, const Episode& alpha) {
    if (alpha.nodes.empty()) throw std::invalid_argument("cannot count an empty episode");
    std::vector<NodeSpec> nodes;
    nodes.reserve(alpha.nodes.size());
    for (const std::string& label : alpha.nodes) {
        auto id = seq.type_id(label);
        if (!id) return std::nullopt;
        nodes.push_back(NodeSpec{*id, nullptr});
    }
    return nodes;
}

std::optional<std::vector<NodeSpec>> resolve(const EventSequence& seq, const GeneralizedEpisode& alpha) {
    if (alpha.nodes.empty()) throw std::invalid_argument("cannot count an empty episode");
    std::vector<NodeSpec> nodes;
    nodes.reserve(alpha.nodes.size());
    for (const GeneralizedNode& n : alpha.nodes) {
        auto id = seq.type_id(n.label);
        if (!id) return std::nullopt;
        if (n.dwell.empty()) throw std::invalid_argument("node " + n.label + " has an empty interval set");
        nodes.push_back(NodeSpec{*id, &n.dwell});
    }
    return nodes;
}

std::optional<std::vector<NodeSpec>> resolve(const EventSequence& seq, const AnyEpisode& alpha) {
    return std::visit([&](const auto& ep) { return resolve(seq, ep); }, alpha);
}

/// Single-pass counter. For every prefix length k it keeps only the
/// partial match with the latest span anchor: expiry feasibility is
/// monotone in the anchor, so the latest-anchored partial dominates all
/// others. Completing an occurrence that satisfies the expiry limit
/// increments the count and clears every partial state, which makes the
/// counted occurrences pairwise non-overlapped and consumes the completing
/// event. Prefix lengths are advanced longest-first so one event never
/// feeds two transitions of the same match.
CountResult count_core(const EventSequence& seq, const std::vector<NodeSpec>& nodes, const ExpiryPolicy& exp,
                       bool collect) {
    const std::size_t n = nodes.size();

    struct Partial {
        bool active = false;
        Seconds anchor = 0;
        std::vector<std::size_t> indices;  // tracked only when collecting
    };
    std::vector<Partial> len(n + 1);  // len[k]: best partial covering the first k nodes
    len[0].active = true;

    CountResult result;
    const std::vector<Event>& events = seq.events();
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& e = events[i];
        for (std::size_t k = n; k-- > 0;) {
            if (!len[k].active || !nodes[k].matches(e)) continue;
            const Seconds anchor = (k == 0) ? exp.anchor(e) : len[k].anchor;
            if (k + 1 == n) {
                if (!exp.satisfies(anchor, e.start)) continue;
                ++result.frequency;
                if (collect) {
                    std::vector<std::size_t> occ = len[k].indices;
                    occ.push_back(i);
                    result.occurrences.push_back(std::move(occ));
                }
                for (std::size_t j = 1; j <= n; ++j) len[j] = Partial{};
                break;  // the completing event is consumed
            }
            if (!len[k + 1].active || anchor > len[k + 1].anchor) {
                len[k + 1].active = true;
                len[k + 1].anchor = anchor;
                if (collect) {
                    len[k + 1].indices = len[k].indices;
                    len[k + 1].indices.push_back(i);
                }
            }
        }
    }
    return result;
}

CountResult count_resolved(const EventSequence& seq, const std::optional<std::vector<NodeSpec>>& nodes,
                           const ExpiryPolicy& exp, bool collect) {
    if (!nodes) return CountResult{};  // a label outside the alphabet never occurs
    return count_core(seq, *nodes, exp, collect);
}

}  // namespace

CountResult count_non_overlapped(const EventSequence& seq, const Episode& alpha, const ExpiryPolicy& exp,
                                 bool collect_occurrences) {
    return count_resolved(seq, resolve(seq, alpha), exp, collect_occurrences);
}

CountResult count_generalized(const EventSequence& seq, const GeneralizedEpisode& alpha, const ExpiryPolicy& exp,
                              bool collect_occurrences) {
    return count_resolved(seq, resolve(seq, alpha), exp, collect_occurrences);
}

CountResult count_any(const EventSequence& seq, const AnyEpisode& alpha, const ExpiryPolicy& exp,
                      bool collect_occurrences) {
    return count_resolved(seq, resolve(seq, alpha), exp, collect_occurrences);
}

std::int64_t count_windows(const EventSequence& seq, const Episode& alpha, Seconds width) {
    if (width < 1) throw std::invalid_argument("window width must be at least one second");
    auto nodes = resolve(seq, alpha);
    if (!nodes || seq.empty()) return 0;
    const std::size_t n = nodes->size();

    // No-reset variant of the counting pass: latest[k] is the latest
    // possible first-event start over all matches of the first k nodes.
    // Each completion at event j yields the window-start range
    // [start_j - width + 1, latest_first_start]; the answer is the size of
    // the union of those ranges, clamped to the legal window positions.
    struct Partial {
        bool active = false;
        Seconds first_start = 0;
    };
    std::vector<Partial> len(n + 1);
    len[0].active = true;

    std::vector<std::pair<Seconds, Seconds>> ranges;
    const std::vector<Event>& events = seq.events();
    const Seconds lo_limit = events.front().start - width + 1;
    const Seconds hi_limit = events.back().start;
    for (const Event& e : events) {
        for (std::size_t k = n; k-- > 0;) {
            if (!len[k].active || !(*nodes)[k].matches(e)) continue;
            const Seconds first_start = (k == 0) ? e.start : len[k].first_start;
            if (k + 1 == n) {
                const Seconds lo = std::max(e.start - width + 1, lo_limit);
                const Seconds hi = std::min(first_start, hi_limit);
                if (lo <= hi) ranges.emplace_back(lo, hi);
            }
            if (k + 1 < n && (!len[k + 1].active || first_start > len[k + 1].first_start)) {
                len[k + 1].active = true;
                len[k + 1].first_start = first_start;
            }
        }
    }

    std::sort(ranges.begin(), ranges.end());
    std::int64_t total = 0;
    Seconds covered_up_to = 0;  // meaningful only once `covering`
    bool covering = false;
    for (const auto& [lo, hi] : ranges) {
        const Seconds from = covering ? std::max(lo, covered_up_to + 1) : lo;
        if (from <= hi) {
            total += hi - from + 1;
            covered_up_to = hi;
            covering = true;
        }
    }
    return total;
}

std::vector<std::int64_t> count_batch(const EventSequence& seq, const std::vector<AnyEpisode>& candidates,
                                      const ExpiryPolicy& exp, unsigned workers) {
    std::vector<std::int64_t> counts(candidates.size(), 0);
    auto count_range = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i) counts[i] = count_any(seq, candidates[i], exp).frequency;
    };
    if (workers <= 1 || candidates.size() <= 1) {
        count_range(0, candidates.size());
        return counts;
    }
    const std::size_t n_workers = std::min<std::size_t>(workers, candidates.size());
    const std::size_t chunk = (candidates.size() + n_workers - 1) / n_workers;
    std::vector<std::future<void>> futures;
    for (std::size_t w = 0; w < n_workers; ++w) {
        const std::size_t from = w * chunk;
        const std::size_t to = std::min(from + chunk, candidates.size());
        if (from >= to) break;
        futures.push_back(std::async(std::launch::async, count_range, from, to));
    }
    for (auto& f : futures) f.get();
    return counts;
}

namespace {

struct Enumerator {
    const std::vector<Event>& events;
    const std::vector<NodeSpec>& nodes;
    const ExpiryPolicy& exp;
    std::size_t budget;
    std::size_t visited = 0;
    std::vector<std::size_t> current = {};
    std::vector<std::vector<std::size_t>> out = {};

    void run(std::size_t k, std::size_t from, Seconds anchor) {
        for (std::size_t i = from; i < events.size(); ++i) {
            if (++visited > budget) throw std::length_error("occurrence enumeration exceeded its budget");
            const Event& e = events[i];
            // Starts are nondecreasing, so once the span limit is blown for
            // this anchor no later event can fix it.
            if (k > 0 && !exp.satisfies(anchor, e.start)) break;
            if (!nodes[k].matches(e)) continue;
            const Seconds a = (k == 0) ? exp.anchor(e) : anchor;
            current.push_back(i);
            if (k + 1 == nodes.size()) {
                if (exp.satisfies(a, e.start)) out.push_back(current);
            } else {
                run(k + 1, i + 1, a);
            }
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_occurrences(const EventSequence& seq, const AnyEpisode& alpha,
                                                            const ExpiryPolicy& exp, std::size_t budget) {
    auto nodes = resolve(seq, alpha);
    if (!nodes) return {};
    Enumerator en{seq.events(), *nodes, exp, budget};
    en.run(0, 0, 0);
    return std::move(en.out);
}

std::int64_t max_non_overlapped_reference(const EventSequence& seq, const AnyEpisode& alpha, const ExpiryPolicy& exp,
                                          std::size_t budget) {
    std::vector<std::vector<std::size_t>> occs = enumerate_occurrences(seq, alpha, exp, budget);
    // Earliest-end greedy over the index intervals [front, back] of each
    // occurrence gives the maximum pairwise-disjoint subset.
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
    intervals.reserve(occs.size());
    for (const auto& occ : occs) intervals.emplace_back(occ.back(), occ.front());
    std::sort(intervals.begin(), intervals.end());
    std::int64_t count = 0;
    std::size_t next_free = 0;  // smallest index the next occurrence may use
    for (const auto& [last, first] : intervals) {
        if (first >= next_free) {
            ++count;
            next_free = last + 1;
        }
    }
    return count;
}

}  // namespace epimine
