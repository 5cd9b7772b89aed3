#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "epimine/alerts.hpp"
#include "epimine/ingest.hpp"
#include "epimine/mining.hpp"
#include "epimine/pipeline.hpp"
#include "epimine/postfilter.hpp"
#include "epimine/rules.hpp"

namespace epimine {

struct ScoreThresholds {
    double min_best = 75.0;
    double min_worst = 25.0;
};

struct AlertConfig {
    int window_days = 7;  // history length fed into each daily run
    AlertThresholds thresholds;
};

/// Everything a CLI invocation needs, loaded from one JSON file. See the
/// README for the schema. Paths inside the config (topology, known
/// episodes, descriptions) are resolved relative to the config file.
struct RunConfig {
    LogFormat format;
    PreFilterConfig prefilter;
    MiningConfig mining;
    ScoreThresholds scores;
    std::optional<StructuralCategory> restrict_category;
    Topology topology;
    KnownEpisodeList known;
    std::map<std::string, std::string> descriptions;  // event label -> human description
    AlertConfig alerts;

    /// The analysis-facing slice of the config.
    AnalysisContext analysis_context() const;

    /// Throws ConfigError on unreadable files, malformed JSON, unknown
    /// enum values, bad column mappings or out-of-range numbers.
    static RunConfig load(const std::filesystem::path& config_path);
};

}  // namespace epimine
