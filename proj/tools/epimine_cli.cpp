#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "epimine/alerts.hpp"
#include "epimine/config.hpp"
#include "epimine/counting.hpp"
#include "epimine/errors.hpp"
#include "epimine/ingest.hpp"
#include "epimine/json_io.hpp"
#include "epimine/pipeline.hpp"
#include "epimine/report.hpp"

namespace fs = std::filesystem;
using namespace epimine;

namespace {

std::vector<FaultRecord> ingest_file(const fs::path& input, const RunConfig& cfg) {
    std::ifstream in(input);
    if (!in) throw DataError("cannot read input log: " + input.string());
    ParseResult parsed = parse_log(in, cfg.format);
    for (const RowError& e : parsed.errors) {
        std::fprintf(stderr, "warning: %s row %zu: %s\n", input.string().c_str(), e.row, e.message.c_str());
    }
    PreFilterStats stats;
    std::vector<FaultRecord> records = prefilter(std::move(parsed.records), cfg.prefilter, &stats);
    std::fprintf(stderr,
                 "prefilter: kept %zu records (dropped %zu excluded, %zu zero-duration, %zu out-of-bounds, "
                 "%zu outside group)\n",
                 records.size(), stats.dropped_excluded, stats.dropped_zero_duration, stats.dropped_bounds,
                 stats.dropped_group);
    return records;
}

/// Records for one production line, honoring --line when the log carries a
/// line column.
std::vector<FaultRecord> select_line(std::vector<FaultRecord> records, const RunConfig& cfg,
                                     const std::optional<std::string>& line) {
    if (cfg.format.col_line < 0) {
        if (line) throw ConfigError("--line was given but the column mapping has no line column");
        return records;
    }
    auto partitions = partition_by_line(std::move(records));
    if (!line) {
        if (partitions.size() > 1) {
            std::string lines;
            for (const auto& [name, part] : partitions) lines += (lines.empty() ? "" : ", ") + name;
            throw ConfigError("the log covers several production lines (" + lines + "); pick one with --line");
        }
        return partitions.empty() ? std::vector<FaultRecord>{} : std::move(partitions.begin()->second);
    }
    auto it = partitions.find(*line);
    if (it == partitions.end()) throw DataError("no records for line \"" + *line + "\"");
    return std::move(it->second);
}

void write_file(const fs::path& path, const std::string& bytes) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << bytes;
    if (!out.flush()) throw DataError("failed writing " + path.string());
}

std::vector<AnnotatedEpisode> apply_score_floors(std::vector<AnnotatedEpisode> episodes, const ScoreThresholds& t) {
    std::erase_if(episodes, [&](const AnnotatedEpisode& e) {
        return e.scored.best < t.min_best || e.scored.worst < t.min_worst;
    });
    return episodes;
}

int run_mine(const fs::path& config_path, const fs::path& input, const fs::path& out_dir,
             std::optional<int> workers) {
    RunConfig cfg = RunConfig::load(config_path);
    if (workers) cfg.mining.workers = static_cast<unsigned>(*workers);

    std::vector<FaultRecord> records = ingest_file(input, cfg);
    auto partitions = partition_by_line(std::move(records));
    const bool per_line_dirs = cfg.format.col_line >= 0 && !partitions.empty();
    if (partitions.empty()) partitions.emplace("", std::vector<FaultRecord>{});

    // Render everything first; files are only written once no error can
    // occur, so a failed run leaves no partial reports behind.
    std::vector<std::pair<fs::path, std::string>> outputs;
    for (const auto& [line, line_records] : partitions) {
        const EventSequence seq = to_sequence(line_records, cfg.prefilter.granularity);
        const AnalysisResult analysis = analyze(seq, cfg.analysis_context());
        for (const std::string& d : analysis.diagnostics) {
            std::fprintf(stderr, "warning: %s\n", d.c_str());
        }
        const std::vector<AnnotatedEpisode> rows =
            sort_for_report(apply_score_floors(analysis.annotated, cfg.scores));
        const fs::path dir = per_line_dirs ? out_dir / (line.empty() ? "unspecified" : line) : out_dir;
        outputs.emplace_back(dir / "episodes.json",
                             render_json_report(analysis, rows, cfg, seq).dump(2) + "\n");
        outputs.emplace_back(dir / "pairs.csv", render_pair_csv(rows, cfg.descriptions));
    }
    for (const auto& [path, bytes] : outputs) write_file(path, bytes);
    return 0;
}

int run_alerts(const fs::path& config_path, const fs::path& runs_dir, const std::string& from_text,
               const std::string& to_text, const std::optional<fs::path>& input,
               const std::optional<fs::path>& out_override, const std::optional<std::string>& line) {
    RunConfig cfg = RunConfig::load(config_path);
    Date from, to;
    try {
        from = parse_date(from_text);
        to = parse_date(to_text);
    } catch (const std::invalid_argument& err) {
        throw ConfigError(err.what());
    }
    if (from > to) throw ConfigError("--from is after --to");
    const fs::path out_dir = out_override.value_or(runs_dir);

    std::optional<std::vector<FaultRecord>> history;  // parsed lazily, only if a run is missing
    std::vector<DailyRun> runs;
    for (Date day = from; day <= to; day += std::chrono::days{1}) {
        const fs::path file = run_file_path(runs_dir, day);
        if (fs::exists(file)) {
            DailyRun run;
            try {
                run = load_run(file);
            } catch (const std::runtime_error& err) {
                throw DataError(err.what());
            }
            if (run.date != day) {
                throw DataError("run file " + file.string() + " is for " + format_date(run.date));
            }
            runs.push_back(std::move(run));
            continue;
        }
        if (!input) {
            throw DataError("no run file for " + format_date(day) + " under " + runs_dir.string() +
                            " (pass --input to compute it)");
        }
        if (!history) history = select_line(ingest_file(*input, cfg), cfg, line);
        const Date window_from = day - std::chrono::days{cfg.alerts.window_days - 1};
        const std::vector<FaultRecord> window_records =
            filter_by_time(*history, day_begin(window_from), day_end(day));
        DailyRun run = run_daily(day, window_from, day, to_sequence(window_records, cfg.prefilter.granularity),
                                 cfg.analysis_context());
        save_run(run, runs_dir);
        runs.push_back(std::move(run));
    }

    const std::vector<Alert> alerts = detect_alerts(runs, cfg.alerts.thresholds);
    const auto trend_days = static_cast<std::size_t>(cfg.alerts.thresholds.trend_days);
    for (std::size_t i = trend_days - 1; i < runs.size(); ++i) {
        std::string bytes;
        for (const Alert& a : alerts) {
            if (a.triggering_day == runs[i].date) {
                bytes += alert_to_json(a).dump();
                bytes += '\n';
            }
        }
        write_file(out_dir / ("alerts-" + format_date(runs[i].date) + ".jsonl"), bytes);
    }
    std::fputs(render_alert_table(alerts).c_str(), stdout);
    return 0;
}

int run_explain(const fs::path& config_path, const std::string& episode_text, const fs::path& input,
                const std::optional<std::string>& line) {
    RunConfig cfg = RunConfig::load(config_path);
    AnyEpisode episode;
    try {
        episode = parse_any_episode(episode_text);
    } catch (const std::invalid_argument& err) {
        throw DataError(std::string("bad --episode: ") + err.what());
    }
    const std::vector<FaultRecord> records = select_line(ingest_file(input, cfg), cfg, line);
    const EventSequence seq = to_sequence(records, cfg.prefilter.granularity);
    const CountResult counted = count_any(seq, episode, cfg.mining.expiry, /*collect_occurrences=*/true);
    std::fputs(render_occurrences_jsonl(seq, episode, counted.occurrences).c_str(), stdout);
    std::fprintf(stderr, "frequency %lld for %s\n", static_cast<long long>(counted.frequency),
                 epimine::episode_text(episode).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial episode mining, rule scoring and trend alerts for plant fault logs"};
    app.require_subcommand(1);

    std::string config_path;
    std::string input_path;
    std::string out_path;
    std::string from_text;
    std::string to_text;
    std::string episode;
    std::string runs_path;
    std::optional<std::string> line;
    std::optional<int> workers;
    std::optional<std::string> alerts_input;
    std::optional<std::string> alerts_out;

    CLI::App* mine = app.add_subcommand("mine", "mine one log file and write episode reports");
    mine->add_option("--config", config_path, "run configuration (JSON)")->required();
    mine->add_option("--input", input_path, "fault log to mine")->required();
    mine->add_option("--out", out_path, "directory for the reports")->required();
    mine->add_option("--workers", workers, "threads for candidate counting")->check(CLI::PositiveNumber);

    CLI::App* alerts = app.add_subcommand("alerts", "evaluate daily runs over a date range and raise alerts");
    alerts->add_option("--config", config_path, "run configuration (JSON)")->required();
    alerts->add_option("--runs", runs_path, "directory of per-day run files")->required();
    alerts->add_option("--from", from_text, "first day (YYYY-MM-DD)")->required();
    alerts->add_option("--to", to_text, "last day (YYYY-MM-DD)")->required();
    alerts->add_option("--input", alerts_input, "fault log used to compute missing run files");
    alerts->add_option("--out", alerts_out, "directory for alert files (default: the runs directory)");
    alerts->add_option("--line", line, "production line to analyze when the log covers several");

    CLI::App* explain = app.add_subcommand("explain", "list the counted occurrences of one episode");
    explain->add_option("--config", config_path, "run configuration (JSON)")->required();
    explain->add_option("--episode", episode, "episode text, e.g. \"A -> B\"")->required();
    explain->add_option("--input", input_path, "fault log to search")->required();
    explain->add_option("--line", line, "production line to analyze when the log covers several");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mine->parsed()) return run_mine(config_path, input_path, out_path, workers);
        if (alerts->parsed()) {
            return run_alerts(config_path, runs_path, from_text, to_text,
                              alerts_input ? std::optional<fs::path>(*alerts_input) : std::nullopt,
                              alerts_out ? std::optional<fs::path>(*alerts_out) : std::nullopt, line);
        }
        if (explain->parsed()) return run_explain(config_path, episode, input_path, line);
    } catch (const ConfigError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    } catch (const DataError& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 2;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return 1;
}
