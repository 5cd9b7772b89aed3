#include "epimine/config.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

#include "epimine/errors.hpp"

namespace epimine {
namespace {

using nlohmann::json;

json load_json_file(const std::filesystem::path& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw ConfigError(std::string("cannot read ") + what + " file: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& err) {
        throw ConfigError(std::string("malformed ") + what + " file " + path.string() + ": " + err.what());
    }
}

void parse_columns(const json& cols, LogFormat& fmt) {
    fmt.col_line = fmt.col_station = fmt.col_subsystem = fmt.col_fault = fmt.col_occurred = fmt.col_time2 = -1;
    bool have_duration = false;
    bool have_resolved = false;
    for (const auto& [name, value] : cols.items()) {
        if (!value.is_number_integer() || value.get<int>() < 0) {
            throw ConfigError("column \"" + name + "\" must be a non-negative index");
        }
        const int idx = value.get<int>();
        if (name == "line") {
            fmt.col_line = idx;
        } else if (name == "station") {
            fmt.col_station = idx;
        } else if (name == "subsystem") {
            fmt.col_subsystem = idx;
        } else if (name == "fault") {
            fmt.col_fault = idx;
        } else if (name == "occurred") {
            fmt.col_occurred = idx;
        } else if (name == "duration") {
            fmt.col_time2 = idx;
            have_duration = true;
        } else if (name == "resolved") {
            fmt.col_time2 = idx;
            have_resolved = true;
        } else {
            throw ConfigError("unknown column \"" + name + "\"");
        }
    }
    if (have_duration && have_resolved) throw ConfigError("give either a duration or a resolved column, not both");
    fmt.time2_is_duration = !have_resolved;
    if (fmt.col_station < 0) throw ConfigError("column mapping needs a station column");
    if (fmt.col_occurred < 0) throw ConfigError("column mapping needs an occurred column");
    std::set<int> used;
    for (int idx : {fmt.col_line, fmt.col_station, fmt.col_subsystem, fmt.col_fault, fmt.col_occurred,
                    fmt.col_time2}) {
        if (idx >= 0 && !used.insert(idx).second) {
            throw ConfigError("column index " + std::to_string(idx) + " is mapped twice");
        }
    }
}

std::vector<IntervalSet> parse_buckets(const json& arr) {
    std::vector<IntervalSet> buckets;
    for (const auto& item : arr) {
        try {
            buckets.push_back(IntervalSet::parse(item.get<std::string>()));
        } catch (const std::invalid_argument& err) {
            throw ConfigError(std::string("bad duration bucket: ") + err.what());
        }
    }
    if (buckets.empty()) throw ConfigError("buckets must not be empty");
    return buckets;
}

Topology parse_topology(const json& j, const std::filesystem::path& path) {
    Topology topo;
    if (j.contains("stations")) {
        for (const auto& [station, zone] : j.at("stations").items()) {
            topo.station_zone[station] = zone.get<std::string>();
        }
    }
    if (j.contains("controllers")) {
        for (const auto& [zone, controller] : j.at("controllers").items()) {
            topo.zone_controller[zone] = controller.get<std::string>();
        }
    }
    if (topo.station_zone.empty() && topo.zone_controller.empty()) {
        throw ConfigError("topology file " + path.string() + " defines no stations or controllers");
    }
    return topo;
}

/// Group names may be stations or zones; zones expand to their stations
/// plus the zone's controller.
std::set<std::string> expand_groups(const json& names, const Topology& topo) {
    std::set<std::string> stations;
    for (const auto& item : names) {
        const auto name = item.get<std::string>();
        std::vector<std::string> in_zone = topo.stations_in_zone(name);
        if (in_zone.empty() && topo.zone_controller.count(name) == 0) {
            stations.insert(name);
            continue;
        }
        stations.insert(in_zone.begin(), in_zone.end());
        auto controller = topo.zone_controller.find(name);
        if (controller != topo.zone_controller.end()) stations.insert(controller->second);
    }
    return stations;
}

ExpiryPolicy parse_expiry(const json& j, const std::optional<StructuralCategory>& restrict_category) {
    ExpiryPolicy exp;
    const std::string span = j.value("span_mode", "auto");
    if (span == "auto") {
        exp.span_mode = restrict_category ? apply_category_policy(*restrict_category) : SpanMode::full_span;
    } else if (span == "start_to_start") {
        exp.span_mode = SpanMode::start_to_start;
    } else if (span == "end_to_start") {
        exp.span_mode = SpanMode::end_to_start;
    } else if (span == "full_span") {
        exp.span_mode = SpanMode::full_span;
    } else {
        throw ConfigError("unknown span_mode \"" + span + "\"");
    }
    if (j.contains("limit") && !j.at("limit").is_null()) {
        exp.limit = j.at("limit").get<Seconds>();
    }
    if (restrict_category && j.contains("limits")) {
        const json& limits = j.at("limits");
        const std::string key(to_string(*restrict_category));
        if (limits.contains(key)) exp.limit = limits.at(key).get<Seconds>();
    }
    if (exp.limit && *exp.limit <= 0) throw ConfigError("expiry limit must be positive");
    return exp;
}

}  // namespace

AnalysisContext RunConfig::analysis_context() const {
    return AnalysisContext{mining, restrict_category, topology, known};
}

RunConfig RunConfig::load(const std::filesystem::path& config_path) {
    const json root = load_json_file(config_path, "config");
    const std::filesystem::path base = config_path.parent_path();
    RunConfig cfg;
    try {
        if (root.contains("input")) {
            const json& input = root.at("input");
            const std::string delim = input.value("delimiter", ",");
            if (delim.size() != 1) throw ConfigError("delimiter must be a single character");
            cfg.format.delimiter = delim[0];
            cfg.format.timestamp_format = input.value("timestamp_format", cfg.format.timestamp_format);
            cfg.format.header_lines = input.value("header_lines", 0);
            if (cfg.format.header_lines < 0) throw ConfigError("header_lines must be >= 0");
            if (input.contains("columns")) parse_columns(input.at("columns"), cfg.format);
        }

        try {
            cfg.prefilter.granularity = granularity_from_string(root.value("granularity", "station"));
        } catch (const std::invalid_argument& err) {
            throw ConfigError(err.what());
        }
        if (cfg.prefilter.granularity != Granularity::station && cfg.format.col_subsystem < 0 &&
            cfg.format.col_fault < 0) {
            throw ConfigError("granularity \"" + std::string(to_string(cfg.prefilter.granularity)) +
                              "\" needs a subsystem or fault column");
        }

        if (root.contains("restrict_category") && !root.at("restrict_category").is_null()) {
            try {
                cfg.restrict_category = category_from_string(root.at("restrict_category").get<std::string>());
            } catch (const std::invalid_argument& err) {
                throw ConfigError(err.what());
            }
        }

        if (root.contains("topology")) {
            const std::filesystem::path path = base / root.at("topology").get<std::string>();
            cfg.topology = parse_topology(load_json_file(path, "topology"), path);
        }

        if (root.contains("prefilter")) {
            const json& pf = root.at("prefilter");
            cfg.prefilter.drop_zero_duration = pf.value("drop_zero_duration", false);
            if (pf.contains("duration_bounds") && !pf.at("duration_bounds").is_null()) {
                const json& bounds = pf.at("duration_bounds");
                if (!bounds.is_array() || bounds.size() != 2) {
                    throw ConfigError("duration_bounds must be [min, max]");
                }
                cfg.prefilter.duration_bounds = {bounds[0].get<Seconds>(), bounds[1].get<Seconds>()};
                if (cfg.prefilter.duration_bounds->first > cfg.prefilter.duration_bounds->second) {
                    throw ConfigError("duration_bounds minimum exceeds maximum");
                }
            }
            if (pf.contains("excluded_codes")) {
                cfg.prefilter.excluded_codes = pf.at("excluded_codes").get<std::vector<std::string>>();
            }
            if (pf.contains("group_include") && !pf.at("group_include").is_null()) {
                cfg.prefilter.group_include = expand_groups(pf.at("group_include"), cfg.topology);
            }
        }

        if (root.contains("mining")) {
            const json& mining = root.at("mining");
            const std::string mode = mining.value("mode", "plain");
            if (mode == "plain") {
                cfg.mining.mode = MiningConfig::Mode::plain;
            } else if (mode == "generalized") {
                cfg.mining.mode = MiningConfig::Mode::generalized;
            } else {
                throw ConfigError("unknown mining mode \"" + mode + "\"");
            }
            if (mining.contains("buckets")) cfg.mining.buckets = parse_buckets(mining.at("buckets"));
            if (mining.contains("threshold") && !mining.at("threshold").is_null()) {
                cfg.mining.threshold = mining.at("threshold").get<std::int64_t>();
                if (*cfg.mining.threshold < 1) throw ConfigError("threshold must be >= 1");
            }
            cfg.mining.max_size = mining.value("max_size", cfg.mining.max_size);
            if (cfg.mining.max_size < 1) throw ConfigError("max_size must be >= 1");
            cfg.mining.error_prob = mining.value("error_prob", cfg.mining.error_prob);
            if (cfg.mining.error_prob < 0.0 || cfg.mining.error_prob > 1.0) {
                throw ConfigError("error_prob must lie in [0, 1]");
            }
            const int workers = mining.value("workers", 1);
            if (workers < 1) throw ConfigError("workers must be >= 1");
            cfg.mining.workers = static_cast<unsigned>(workers);
        }

        // The expiry block is resolved even when absent so that span_mode
        // "auto" can follow the restricted category.
        const json expiry = root.contains("mining") ? root.at("mining").value("expiry", json::object())
                                                    : json::object();
        cfg.mining.expiry = parse_expiry(expiry, cfg.restrict_category);

        if (root.contains("scores")) {
            cfg.scores.min_best = root.at("scores").value("min_best", cfg.scores.min_best);
            cfg.scores.min_worst = root.at("scores").value("min_worst", cfg.scores.min_worst);
        }

        if (root.contains("known_episodes")) {
            const std::filesystem::path path = base / root.at("known_episodes").get<std::string>();
            std::ifstream in(path);
            if (!in) throw ConfigError("cannot read known episodes file: " + path.string());
            KnownListParseResult parsed = parse_known_list(in);
            if (!parsed.errors.empty()) {
                std::string msg = "bad known episodes file " + path.string() + ":";
                for (const KnownListParseError& e : parsed.errors) {
                    msg += "\n  line " + std::to_string(e.line) + ": " + e.message;
                }
                throw ConfigError(msg);
            }
            cfg.known = std::move(parsed.list);
        }

        if (root.contains("descriptions")) {
            const std::filesystem::path path = base / root.at("descriptions").get<std::string>();
            const json table = load_json_file(path, "descriptions");
            for (const auto& [label, text] : table.items()) {
                cfg.descriptions[label] = text.get<std::string>();
            }
        }

        if (root.contains("alerts")) {
            const json& alerts = root.at("alerts");
            cfg.alerts.window_days = alerts.value("window_days", cfg.alerts.window_days);
            if (cfg.alerts.window_days < 1) throw ConfigError("window_days must be >= 1");
            cfg.alerts.thresholds.trend_days = alerts.value("trend_days", cfg.alerts.thresholds.trend_days);
            if (cfg.alerts.thresholds.trend_days < 1) throw ConfigError("trend_days must be >= 1");
            cfg.alerts.thresholds.min_freq = alerts.value("min_freq", cfg.alerts.thresholds.min_freq);
            cfg.alerts.thresholds.min_best = alerts.value("min_best", cfg.alerts.thresholds.min_best);
            cfg.alerts.thresholds.min_worst = alerts.value("min_worst", cfg.alerts.thresholds.min_worst);
        }
    } catch (const json::exception& err) {
        throw ConfigError("bad config " + config_path.string() + ": " + err.what());
    }
    return cfg;
}

}  // namespace epimine
