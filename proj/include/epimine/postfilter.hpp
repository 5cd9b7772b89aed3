#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "epimine/counting.hpp"
#include "epimine/episode.hpp"
#include "epimine/rules.hpp"

namespace epimine {

/// Which part of the plant an episode's events belong to.
enum class StructuralCategory {
    individual_machine,                    // every node on one station
    multiple_machine,                      // nodes on two or more stations
    multiple_machine_with_zone_controller, // multiple stations, one being a controller of another's zone
    other,                                 // station not extractable from some label
};

std::string_view to_string(StructuralCategory c);
StructuralCategory category_from_string(std::string_view s);  // throws std::invalid_argument

/// Plant layout: which zone each station belongs to, and which station
/// controls each zone.
struct Topology {
    std::map<std::string, std::string> station_zone;
    std::map<std::string, std::string> zone_controller;

    /// Stations assigned to a zone, sorted.
    std::vector<std::string> stations_in_zone(std::string_view zone) const;
};

/// The station prefix of an event label (everything before the first '_');
/// empty when no station is extractable.
std::string station_of(std::string_view label);

/// Classifies an episode by the stations its node labels mention. If some
/// label yields no station the category is `other` and, when `diagnostic`
/// is non-null, a human-readable explanation is stored there.
StructuralCategory categorize(const AnyEpisode& episode, const Topology& topology,
                              std::string* diagnostic = nullptr);

/// The span measurement each category calls for: on one machine faults
/// queue up, so the span clock starts when the first fault is resolved
/// (end_to_start); across machines faults evolve in parallel, so
/// start_to_start applies; without a category the conservative full_span.
SpanMode apply_category_policy(StructuralCategory category);

enum class KnownTag { none, expected, well_known };

std::string_view to_string(KnownTag t);
KnownTag known_tag_from_string(std::string_view s);  // throws std::invalid_argument

/// Operator-maintained list of episodes that need no (or less) attention.
/// File format: one "well_known: <episode>" or "expected: <episode>" per
/// line; blank lines and lines starting with '#' are ignored.
struct KnownEpisodeList {
    std::map<std::string, KnownTag> entries;  // canonical episode text -> tag

    KnownTag tag_of(const AnyEpisode& episode) const;
};

struct KnownListParseError {
    std::size_t line = 0;
    std::string message;
};

struct KnownListParseResult {
    KnownEpisodeList list;
    std::vector<KnownListParseError> errors;
};

KnownListParseResult parse_known_list(std::istream& in);

/// A scored episode plus its structural category and known-list tag; the
/// unit daily runs and reports deal in.
struct AnnotatedEpisode {
    ScoredEpisode scored;
    StructuralCategory category = StructuralCategory::other;
    KnownTag tag = KnownTag::none;
};

struct FlagResult {
    std::vector<AnnotatedEpisode> kept;     // tag none or expected
    std::vector<AnnotatedEpisode> flagged;  // tag well_known, dropped from reports
};

/// Stamps each episode with its known-list tag and splits off the
/// well-known ones. Order is preserved; rerunning on `kept` changes
/// nothing more.
FlagResult flag_known(std::vector<AnnotatedEpisode> episodes, const KnownEpisodeList& known);

}  // namespace epimine
