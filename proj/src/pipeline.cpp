#include "epimine/pipeline.hpp"

#include <set>
#include <utility>

namespace epimine {
namespace {

/// Hereditary candidate filter: every node label on one station.
bool single_station(const AnyEpisode& episode) {
    std::set<std::string> stations;
    for (const std::string& label : node_labels(episode)) {
        stations.insert(station_of(label));
        if (stations.size() > 1) return false;
    }
    return true;
}

}  // namespace

AnalysisResult analyze(const EventSequence& seq, const AnalysisContext& ctx) {
    MiningConfig mining = ctx.mining;
    if (ctx.restrict_category == StructuralCategory::individual_machine && !mining.candidate_filter) {
        mining.candidate_filter = single_station;
    }

    AnalysisResult result;
    result.frequent = mine(seq, mining);

    FrequencyTable freqs(result.frequent, seq, mining.expiry);
    std::vector<AnnotatedEpisode> annotated;
    for (ScoredEpisode& scored : score_all(result.frequent, freqs)) {
        AnnotatedEpisode entry;
        std::string diagnostic;
        entry.category = categorize(scored.base.episode, ctx.topology, &diagnostic);
        if (!diagnostic.empty()) {
            result.diagnostics.push_back(episode_text(scored.base.episode) + ": " + diagnostic);
        }
        if (ctx.restrict_category && entry.category != *ctx.restrict_category) continue;
        entry.scored = std::move(scored);
        annotated.push_back(std::move(entry));
    }

    FlagResult flagged = flag_known(std::move(annotated), ctx.known);
    result.annotated = std::move(flagged.kept);
    result.flagged = std::move(flagged.flagged);
    return result;
}

}  // namespace epimine
