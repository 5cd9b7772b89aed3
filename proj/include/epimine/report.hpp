#pragma once

#include <map>
#include <string>
#include <vector>

#include "epimine/alerts.hpp"
#include "epimine/config.hpp"
#include "epimine/json_io.hpp"
#include "epimine/pipeline.hpp"

namespace epimine {

/// Report order: frequency descending, then best score descending, then
/// episode text ascending.
std::vector<AnnotatedEpisode> sort_for_report(std::vector<AnnotatedEpisode> episodes);

/// The pairwise-rule table: one row per two-node episode, with the
/// frequency, both event codes with their descriptions, and the confidence
/// of each direction ("first code implies the pair", "second code implies
/// the pair"), percentages with two decimals. Rows keep their input order;
/// callers sort first.
std::string render_pair_csv(const std::vector<AnnotatedEpisode>& episodes,
                            const std::map<std::string, std::string>& descriptions);

/// Full machine-readable report: run parameters, sequence stats, every
/// episode of size >= 2 with scores and categories, the flagged well-known
/// episodes, and categorization diagnostics.
ordered_json render_json_report(const AnalysisResult& analysis, const std::vector<AnnotatedEpisode>& episodes,
                                const RunConfig& cfg, const EventSequence& seq);

/// One JSON object per occurrence, with the matched events spelled out.
std::string render_occurrences_jsonl(const EventSequence& seq, const AnyEpisode& episode,
                                     const std::vector<std::vector<std::size_t>>& occurrences);

std::string render_alert_table(const std::vector<Alert>& alerts);

}  // namespace epimine
