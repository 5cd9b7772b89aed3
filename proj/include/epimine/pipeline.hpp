#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epimine/mining.hpp"
#include "epimine/postfilter.hpp"
#include "epimine/rules.hpp"

namespace epimine {

/// Everything one analysis pass needs besides the events themselves.
struct AnalysisContext {
    MiningConfig mining;
    /// When set, only episodes of this category are reported. For
    /// individual_machine the restriction is hereditary (a subepisode of a
    /// one-station episode stays on that station), so it is also pushed
    /// into candidate generation; the multi-station categories are not
    /// hereditary and are only enforced on the output.
    std::optional<StructuralCategory> restrict_category;
    Topology topology;
    KnownEpisodeList known;
};

struct AnalysisResult {
    /// Raw mining output, every size.
    std::vector<FrequentEpisode> frequent;
    /// Episodes of size >= 2, scored, categorized, well-known ones removed,
    /// in mining order.
    std::vector<AnnotatedEpisode> annotated;
    /// The well-known episodes that were removed.
    std::vector<AnnotatedEpisode> flagged;
    /// One note per episode whose category could not be determined.
    std::vector<std::string> diagnostics;
};

/// mine -> score -> categorize -> flag: the shared backbone of the mine
/// command and the daily alert runs. Score thresholds are not applied
/// here; reporting and alerting each have their own.
AnalysisResult analyze(const EventSequence& seq, const AnalysisContext& ctx);

}  // namespace epimine
