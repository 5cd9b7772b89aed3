#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epimine/event_model.hpp"

namespace epimine {

/// One fault log row after parsing. Times are epoch seconds (UTC).
struct FaultRecord {
    std::string line;       // production line; empty when the log has none
    std::string station;
    std::string subsystem;  // empty when the log has none
    std::string fault;      // fault code; empty when the log has none
    Seconds occurred = 0;
    Seconds resolved = 0;
};

/// How specific an event type is. Coarser granularities merge fault codes
/// into their subsystem or station.
enum class Granularity { station, station_subsystem, station_subsystem_fault };

Granularity granularity_from_string(std::string_view s);  // throws std::invalid_argument
std::string_view to_string(Granularity g);

/// Shape of a delimited fault log. Column indices are 0-based; -1 marks a
/// column the log does not have. `timestamp_format` is a strptime format
/// interpreted as UTC, or the special value "epoch" for integer seconds.
struct LogFormat {
    char delimiter = ',';
    int col_line = -1;
    int col_station = 0;
    int col_subsystem = -1;
    int col_fault = 1;
    int col_occurred = 2;
    int col_time2 = 3;            // duration or resolved time; -1 for instantaneous logs
    bool time2_is_duration = true;
    std::string timestamp_format = "%Y-%m-%d %H:%M:%S";
    int header_lines = 0;
};

struct RowError {
    std::size_t row = 0;  // 1-based physical line number in the input
    std::string message;
};

struct ParseResult {
    std::vector<FaultRecord> records;
    std::vector<RowError> errors;  // bad rows are skipped, never fatal
};

/// Epoch seconds for `text` under `format` (UTC); nullopt if the text does
/// not fully match.
std::optional<Seconds> parse_timestamp(const std::string& text, const std::string& format);

/// Reads a delimited fault log. Blank lines are skipped; rows with missing
/// columns, unparseable timestamps, or negative durations are reported in
/// `errors` and dropped.
ParseResult parse_log(std::istream& in, const LogFormat& format);

struct PreFilterConfig {
    Granularity granularity = Granularity::station;
    bool drop_zero_duration = false;
    /// Closed bounds on duration, seconds.
    std::optional<std::pair<Seconds, Seconds>> duration_bounds;
    /// Codes to drop, matched against station, subsystem and fault code;
    /// a trailing '*' makes an entry a prefix pattern ("E-Stop*").
    std::vector<std::string> excluded_codes;
    /// When set, keep only these stations.
    std::optional<std::set<std::string>> group_include;
};

struct PreFilterStats {
    std::size_t dropped_excluded = 0;
    std::size_t dropped_zero_duration = 0;
    std::size_t dropped_bounds = 0;
    std::size_t dropped_group = 0;
};

/// Applies the row filters in a fixed order: excluded codes first, then the
/// zero-duration/bounds checks, then the station group. Idempotent.
std::vector<FaultRecord> prefilter(std::vector<FaultRecord> records, const PreFilterConfig& cfg,
                                   PreFilterStats* stats = nullptr);

/// Groups records by production line (map order: line name ascending);
/// within each line, records are sorted by occurred time, ties keeping
/// input order.
std::map<std::string, std::vector<FaultRecord>> partition_by_line(std::vector<FaultRecord> records);

/// Keeps records with occurred in [from, to] (closed), preserving order.
std::vector<FaultRecord> filter_by_time(std::vector<FaultRecord> records, Seconds from, Seconds to);

/// The event label of a record at a granularity: its identifying fields
/// joined with '_' (so the station is recoverable as the first component).
std::string event_label(const FaultRecord& record, Granularity g);

/// Builds the event sequence: label per `event_label`, start = occurred,
/// end = resolved.
EventSequence to_sequence(const std::vector<FaultRecord>& records, Granularity g);

}  // namespace epimine
