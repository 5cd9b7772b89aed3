#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epimine/event_model.hpp"

namespace epimine {

/// Closed integer interval [lo, hi] of durations, in seconds.
/// hi == kUnbounded encodes an open-ended bucket such as "> 1800".
struct Interval {
    static constexpr Seconds kUnbounded = std::numeric_limits<Seconds>::max();

    Seconds lo = 0;
    Seconds hi = 0;

    bool contains(Seconds d) const { return d >= lo && d <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A union of disjoint closed intervals, kept sorted by lower bound.
///
/// Text form (inside a node's brackets): "120-600" for [120, 600],
/// ">1800" for [1801, unbounded), "0+" for [0, unbounded); members are
/// comma-separated, e.g. "1-120,601-1800".
class IntervalSet {
public:
    IntervalSet() = default;

    /// Sorts the members; throws std::invalid_argument if any two overlap
    /// or a member has hi < lo.
    explicit IntervalSet(std::vector<Interval> members);

    const std::vector<Interval>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    bool contains(Seconds d) const;

    std::string text() const;

    /// Parses the bracket-interior text form. Accepts "lo-hi", ">n"
    /// (meaning [n+1, unbounded)) and "lo+" (meaning [lo, unbounded)).
    static IntervalSet parse(std::string_view body);

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
    friend auto operator<=>(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> members_;
};

inline bool interval_contains(const IntervalSet& s, Seconds d) { return s.contains(d); }

/// A serial episode: event types that must occur in this order.
struct Episode {
    std::vector<std::string> nodes;

    std::size_t size() const { return nodes.size(); }

    /// "A -> B -> C"
    std::string text() const;

    friend bool operator==(const Episode&, const Episode&) = default;
    friend auto operator<=>(const Episode&, const Episode&) = default;
};

/// A node of a duration-aware episode: an event type plus the set of
/// dwelling times it accepts.
struct GeneralizedNode {
    std::string label;
    IntervalSet dwell;

    friend bool operator==(const GeneralizedNode&, const GeneralizedNode&) = default;
    friend auto operator<=>(const GeneralizedNode&, const GeneralizedNode&) = default;
};

/// A serial episode whose nodes also constrain event durations.
struct GeneralizedEpisode {
    std::vector<GeneralizedNode> nodes;

    std::size_t size() const { return nodes.size(); }

    /// "A[1-120] -> B[>1800]"
    std::string text() const;

    friend bool operator==(const GeneralizedEpisode&, const GeneralizedEpisode&) = default;
    friend auto operator<=>(const GeneralizedEpisode&, const GeneralizedEpisode&) = default;
};

/// Plain or duration-aware episode; mining results and reports carry this.
using AnyEpisode = std::variant<Episode, GeneralizedEpisode>;

std::size_t episode_size(const AnyEpisode& e);
std::string episode_text(const AnyEpisode& e);
std::vector<std::string> node_labels(const AnyEpisode& e);

/// beta is a subepisode of alpha: beta's nodes appear in alpha in order
/// (not necessarily contiguously). For duration-aware episodes the matched
/// nodes must agree exactly, label and interval set alike.
bool subepisode(const Episode& beta, const Episode& alpha);
bool subepisode(const GeneralizedEpisode& beta, const GeneralizedEpisode& alpha);
bool subepisode(const AnyEpisode& beta, const AnyEpisode& alpha);

/// Episode with node i removed (0-based). Throws std::out_of_range if i is
/// invalid, std::invalid_argument if the episode has only one node.
Episode drop_node(const Episode& alpha, std::size_t i);
GeneralizedEpisode drop_node(const GeneralizedEpisode& alpha, std::size_t i);
AnyEpisode drop_node(const AnyEpisode& alpha, std::size_t i);

/// Parses "A -> B -> C". Throws std::invalid_argument on empty nodes or
/// stray brackets.
Episode parse_episode(std::string_view text);

/// Parses "A[1-120] -> B[>1800]". Every node must carry a bracket part.
GeneralizedEpisode parse_generalized(std::string_view text);

/// Parses either flavor, chosen by the presence of '['.
AnyEpisode parse_any_episode(std::string_view text);

}  // namespace epimine
