#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epimine/event_model.hpp"
#include "epimine/pipeline.hpp"
#include "epimine/postfilter.hpp"

namespace epimine {

/// Calendar day, UTC.
using Date = std::chrono::sys_days;

/// Parses "YYYY-MM-DD"; throws std::invalid_argument on malformed or
/// impossible dates.
Date parse_date(std::string_view text);
std::string format_date(Date d);

/// First / last second of the day (closed range).
Seconds day_begin(Date d);
Seconds day_end(Date d);

/// One day's analysis over its trailing history window.
struct DailyRun {
    Date date{};
    Date window_from{};
    Date window_to{};
    std::vector<AnnotatedEpisode> results;
};

/// Analyzes `window_events` (the events of [window_from, window_to],
/// already ingested and prefiltered) on behalf of `date`. window_to is
/// normally `date` itself.
DailyRun run_daily(Date date, Date window_from, Date window_to, const EventSequence& window_events,
                   const AnalysisContext& ctx);

struct AlertThresholds {
    int trend_days = 4;            // length D of the qualifying streak
    std::int64_t min_freq = 1;     // frequency floor on the last day
    double min_best = 0.0;         // score floors on the last day
    double min_worst = 0.0;
};

struct Alert {
    std::string episode;
    std::vector<std::pair<Date, std::int64_t>> trend;  // the D qualifying days
    Date triggering_day{};
    double best = 0.0;
    double worst = 0.0;
    StructuralCategory category = StructuralCategory::other;
};

/// The day-level predicate behind detect_alerts: the frequencies of one
/// episode over the last D runs, oldest first. Qualifies when the episode
/// was present every day (no gap), never lost frequency, and on the last
/// day clears min_freq. (Score floors are checked separately, against the
/// last day's run.)
bool trend_qualifies(const std::vector<std::int64_t>& last_d_frequencies, const AlertThresholds& t);

/// Scans consecutive daily runs and raises an alert whenever an episode
/// starts to qualify: rising (non-decreasing) frequency across the last
/// `trend_days` runs plus the frequency/score floors on the newest run.
/// While an episode keeps qualifying day after day it stays silenced; it
/// can alert again only after a day on which it did not qualify. Runs must
/// be consecutive calendar days (throws std::invalid_argument naming the
/// gap); fewer than trend_days runs yield no alerts. Alerts are ordered by
/// day, then episode text.
std::vector<Alert> detect_alerts(const std::vector<DailyRun>& runs, const AlertThresholds& t);

/// Run persistence: runs/YYYY-MM-DD.json.
std::filesystem::path run_file_path(const std::filesystem::path& dir, Date d);
void save_run(const DailyRun& run, const std::filesystem::path& dir);
/// Throws std::runtime_error on unreadable or malformed files.
DailyRun load_run(const std::filesystem::path& file);

}  // namespace epimine
