#include "epimine/postfilter.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <stdexcept>

namespace epimine {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view to_string(StructuralCategory c) {
    switch (c) {
        case StructuralCategory::individual_machine: return "individual_machine";
        case StructuralCategory::multiple_machine: return "multiple_machine";
        case StructuralCategory::multiple_machine_with_zone_controller:
            return "multiple_machine_with_zone_controller";
        case StructuralCategory::other: return "other";
    }
    return "other";
}

StructuralCategory category_from_string(std::string_view s) {
    if (s == "individual_machine") return StructuralCategory::individual_machine;
    if (s == "multiple_machine") return StructuralCategory::multiple_machine;
    if (s == "multiple_machine_with_zone_controller") return StructuralCategory::multiple_machine_with_zone_controller;
    if (s == "other") return StructuralCategory::other;
    throw std::invalid_argument("unknown structural category: \"" + std::string(s) + "\"");
}

std::vector<std::string> Topology::stations_in_zone(std::string_view zone) const {
    std::vector<std::string> out;
    for (const auto& [station, z] : station_zone) {
        if (z == zone) out.push_back(station);
    }
    return out;  // station_zone is ordered, so this is sorted
}

std::string station_of(std::string_view label) {
    const std::size_t underscore = label.find('_');
    if (underscore == std::string_view::npos) return std::string(label);
    return std::string(label.substr(0, underscore));
}

StructuralCategory categorize(const AnyEpisode& episode, const Topology& topology, std::string* diagnostic) {
    std::set<std::string> stations;
    for (const std::string& label : node_labels(episode)) {
        std::string station = station_of(label);
        if (station.empty()) {
            if (diagnostic) *diagnostic = "no station extractable from label \"" + label + "\"";
            return StructuralCategory::other;
        }
        stations.insert(std::move(station));
    }
    if (stations.empty()) {
        if (diagnostic) *diagnostic = "episode has no nodes";
        return StructuralCategory::other;
    }
    if (stations.size() == 1) return StructuralCategory::individual_machine;
    for (const std::string& candidate_controller : stations) {
        for (const std::string& station : stations) {
            if (station == candidate_controller) continue;
            auto zone = topology.station_zone.find(station);
            if (zone == topology.station_zone.end()) continue;
            auto controller = topology.zone_controller.find(zone->second);
            if (controller != topology.zone_controller.end() && controller->second == candidate_controller) {
                return StructuralCategory::multiple_machine_with_zone_controller;
            }
        }
    }
    return StructuralCategory::multiple_machine;
}

SpanMode apply_category_policy(StructuralCategory category) {
    switch (category) {
        case StructuralCategory::individual_machine: return SpanMode::end_to_start;
        case StructuralCategory::multiple_machine:
        case StructuralCategory::multiple_machine_with_zone_controller: return SpanMode::start_to_start;
        case StructuralCategory::other: return SpanMode::full_span;
    }
    return SpanMode::full_span;
}

std::string_view to_string(KnownTag t) {
    switch (t) {
        case KnownTag::none: return "none";
        case KnownTag::expected: return "expected";
        case KnownTag::well_known: return "well_known";
    }
    return "none";
}

KnownTag known_tag_from_string(std::string_view s) {
    if (s == "none") return KnownTag::none;
    if (s == "expected") return KnownTag::expected;
    if (s == "well_known") return KnownTag::well_known;
    throw std::invalid_argument("unknown episode tag: \"" + std::string(s) + "\"");
}

KnownTag KnownEpisodeList::tag_of(const AnyEpisode& episode) const {
    auto it = entries.find(episode_text(episode));
    return it == entries.end() ? KnownTag::none : it->second;
}

KnownListParseResult parse_known_list(std::istream& in) {
    KnownListParseResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const std::size_t colon = body.find(':');
        if (colon == std::string_view::npos) {
            result.errors.push_back({line_no, "missing \"well_known:\" or \"expected:\" prefix"});
            continue;
        }
        std::string_view tag_text = trim(body.substr(0, colon));
        std::string_view episode_part = trim(body.substr(colon + 1));
        KnownTag tag;
        if (tag_text == "well_known") {
            tag = KnownTag::well_known;
        } else if (tag_text == "expected") {
            tag = KnownTag::expected;
        } else {
            result.errors.push_back({line_no, "unknown tag \"" + std::string(tag_text) + "\""});
            continue;
        }
        try {
            // Canonicalize through the episode parser so lookups are
            // insensitive to spacing.
            result.list.entries[episode_text(parse_any_episode(episode_part))] = tag;
        } catch (const std::invalid_argument& err) {
            result.errors.push_back({line_no, err.what()});
        }
    }
    return result;
}

FlagResult flag_known(std::vector<AnnotatedEpisode> episodes, const KnownEpisodeList& known) {
    FlagResult result;
    for (AnnotatedEpisode& e : episodes) {
        e.tag = known.tag_of(e.scored.base.episode);
        if (e.tag == KnownTag::well_known) {
            result.flagged.push_back(std::move(e));
        } else {
            result.kept.push_back(std::move(e));
        }
    }
    return result;
}

}  // namespace epimine
