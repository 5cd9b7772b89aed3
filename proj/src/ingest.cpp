#include "epimine/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <ctime>
#include <istream>
#include <stdexcept>

namespace epimine {
namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_fields(std::string_view row, char delimiter) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = row.find(delimiter, pos);
        if (next == std::string_view::npos) {
            fields.push_back(trim(row.substr(pos)));
            break;
        }
        fields.push_back(trim(row.substr(pos, next - pos)));
        pos = next + 1;
    }
    return fields;
}

std::optional<Seconds> parse_integer(const std::string& text) {
    Seconds value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

/// True when `pattern` matches `code`: exact, or prefix when the pattern
/// ends in '*'.
bool code_matches(const std::string& code, const std::string& pattern) {
    if (!pattern.empty() && pattern.back() == '*') {
        const std::string_view prefix(pattern.data(), pattern.size() - 1);
        return std::string_view(code).substr(0, prefix.size()) == prefix;
    }
    return code == pattern;
}

bool record_excluded(const FaultRecord& r, const std::vector<std::string>& patterns) {
    for (const std::string& p : patterns) {
        if (code_matches(r.station, p) || code_matches(r.subsystem, p) || code_matches(r.fault, p)) return true;
    }
    return false;
}

}  // namespace

Granularity granularity_from_string(std::string_view s) {
    if (s == "station") return Granularity::station;
    if (s == "station+subsystem") return Granularity::station_subsystem;
    if (s == "station+subsystem+fault") return Granularity::station_subsystem_fault;
    throw std::invalid_argument("unknown granularity: \"" + std::string(s) + "\"");
}

std::string_view to_string(Granularity g) {
    switch (g) {
        case Granularity::station: return "station";
        case Granularity::station_subsystem: return "station+subsystem";
        case Granularity::station_subsystem_fault: return "station+subsystem+fault";
    }
    return "station";
}

std::optional<Seconds> parse_timestamp(const std::string& text, const std::string& format) {
    if (format == "epoch") return parse_integer(text);
    std::tm tm{};
    const char* rest = strptime(text.c_str(), format.c_str(), &tm);
    if (rest == nullptr) return std::nullopt;
    while (*rest != '\0' && std::isspace(static_cast<unsigned char>(*rest))) ++rest;
    if (*rest != '\0') return std::nullopt;
    tm.tm_isdst = 0;
    return static_cast<Seconds>(timegm(&tm));
}

ParseResult parse_log(std::istream& in, const LogFormat& format) {
    ParseResult result;
    std::string row;
    std::size_t row_no = 0;
    const int max_col = std::max({format.col_line, format.col_station, format.col_subsystem, format.col_fault,
                                  format.col_occurred, format.col_time2});
    while (std::getline(in, row)) {
        ++row_no;
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (row_no <= static_cast<std::size_t>(format.header_lines)) continue;
        if (trim(row).empty()) continue;

        std::vector<std::string> fields = split_fields(row, format.delimiter);
        if (static_cast<int>(fields.size()) <= max_col) {
            result.errors.push_back({row_no, "expected at least " + std::to_string(max_col + 1) + " columns, got " +
                                                 std::to_string(fields.size())});
            continue;
        }
        auto field = [&](int col) { return col < 0 ? std::string() : fields[static_cast<std::size_t>(col)]; };

        FaultRecord rec;
        rec.line = field(format.col_line);
        rec.station = field(format.col_station);
        rec.subsystem = field(format.col_subsystem);
        rec.fault = field(format.col_fault);

        const std::string occurred_text = field(format.col_occurred);
        std::optional<Seconds> occurred = parse_timestamp(occurred_text, format.timestamp_format);
        if (!occurred) {
            result.errors.push_back({row_no, "bad timestamp \"" + occurred_text + "\""});
            continue;
        }
        rec.occurred = *occurred;

        if (format.col_time2 < 0) {
            rec.resolved = rec.occurred;
        } else if (format.time2_is_duration) {
            const std::string dur_text = field(format.col_time2);
            std::optional<Seconds> duration = parse_integer(dur_text);
            if (!duration || *duration < 0) {
                result.errors.push_back({row_no, "bad duration \"" + dur_text + "\""});
                continue;
            }
            rec.resolved = rec.occurred + *duration;
        } else {
            const std::string resolved_text = field(format.col_time2);
            std::optional<Seconds> resolved = parse_timestamp(resolved_text, format.timestamp_format);
            if (!resolved) {
                result.errors.push_back({row_no, "bad timestamp \"" + resolved_text + "\""});
                continue;
            }
            if (*resolved < rec.occurred) {
                result.errors.push_back({row_no, "fault resolved before it occurred"});
                continue;
            }
            rec.resolved = *resolved;
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

std::vector<FaultRecord> prefilter(std::vector<FaultRecord> records, const PreFilterConfig& cfg,
                                   PreFilterStats* stats) {
    PreFilterStats local;
    std::erase_if(records, [&](const FaultRecord& r) {
        if (!cfg.excluded_codes.empty() && record_excluded(r, cfg.excluded_codes)) {
            ++local.dropped_excluded;
            return true;
        }
        const Seconds duration = r.resolved - r.occurred;
        if (cfg.drop_zero_duration && duration == 0) {
            ++local.dropped_zero_duration;
            return true;
        }
        if (cfg.duration_bounds && (duration < cfg.duration_bounds->first || duration > cfg.duration_bounds->second)) {
            ++local.dropped_bounds;
            return true;
        }
        if (cfg.group_include && cfg.group_include->count(r.station) == 0) {
            ++local.dropped_group;
            return true;
        }
        return false;
    });
    if (stats) *stats = local;
    return records;
}

std::map<std::string, std::vector<FaultRecord>> partition_by_line(std::vector<FaultRecord> records) {
    std::map<std::string, std::vector<FaultRecord>> partitions;
    for (FaultRecord& r : records) {
        std::string line = r.line;
        partitions[std::move(line)].push_back(std::move(r));
    }
    for (auto& [line, part] : partitions) {
        std::stable_sort(part.begin(), part.end(),
                         [](const FaultRecord& a, const FaultRecord& b) { return a.occurred < b.occurred; });
    }
    return partitions;
}

std::vector<FaultRecord> filter_by_time(std::vector<FaultRecord> records, Seconds from, Seconds to) {
    std::erase_if(records, [&](const FaultRecord& r) { return r.occurred < from || r.occurred > to; });
    return records;
}

std::string event_label(const FaultRecord& record, Granularity g) {
    std::string label = record.station;
    auto append = [&label](const std::string& part) {
        if (part.empty()) return;
        if (!label.empty()) label += '_';
        label += part;
    };
    if (g == Granularity::station_subsystem || g == Granularity::station_subsystem_fault) append(record.subsystem);
    if (g == Granularity::station_subsystem_fault) append(record.fault);
    return label;
}

EventSequence to_sequence(const std::vector<FaultRecord>& records, Granularity g) {
    std::vector<RawEvent> raw;
    raw.reserve(records.size());
    for (const FaultRecord& r : records) {
        raw.push_back(RawEvent{event_label(r, g), r.occurred, r.resolved});
    }
    return make_sequence(raw);
}

}  // namespace epimine
