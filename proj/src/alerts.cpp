#include "epimine/alerts.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "epimine/json_io.hpp"

namespace epimine {
namespace {

int parse_int_field(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("bad date field");
    return value;
}

}  // namespace

Date parse_date(std::string_view text) {
    try {
        if (text.size() != 10 || text[4] != '-' || text[7] != '-') throw std::invalid_argument("shape");
        const int y = parse_int_field(text.substr(0, 4));
        const int m = parse_int_field(text.substr(5, 2));
        const int d = parse_int_field(text.substr(8, 2));
        const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                              std::chrono::day{static_cast<unsigned>(d)}};
        if (!ymd.ok()) throw std::invalid_argument("impossible date");
        return Date{ymd};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad date \"" + std::string(text) + "\" (want YYYY-MM-DD)");
    }
}

std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

Seconds day_begin(Date d) { return static_cast<Seconds>(d.time_since_epoch().count()) * 86400; }

Seconds day_end(Date d) { return day_begin(d) + 86399; }

DailyRun run_daily(Date date, Date window_from, Date window_to, const EventSequence& window_events,
                   const AnalysisContext& ctx) {
    DailyRun run;
    run.date = date;
    run.window_from = window_from;
    run.window_to = window_to;
    run.results = analyze(window_events, ctx).annotated;
    return run;
}

bool trend_qualifies(const std::vector<std::int64_t>& last_d_frequencies, const AlertThresholds& t) {
    if (t.trend_days < 1 || last_d_frequencies.size() != static_cast<std::size_t>(t.trend_days)) return false;
    if (!std::is_sorted(last_d_frequencies.begin(), last_d_frequencies.end())) return false;
    return last_d_frequencies.back() >= t.min_freq;
}

std::vector<Alert> detect_alerts(const std::vector<DailyRun>& runs, const AlertThresholds& t) {
    if (t.trend_days < 1) throw std::invalid_argument("trend_days must be at least 1");
    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i].date != runs[i - 1].date + std::chrono::days{1}) {
            throw std::invalid_argument("daily runs are not consecutive: " + format_date(runs[i - 1].date) +
                                        " is followed by " + format_date(runs[i].date));
        }
    }
    const auto d_days = static_cast<std::size_t>(t.trend_days);
    if (runs.size() < d_days) return {};

    std::vector<std::map<std::string, const AnnotatedEpisode*>> by_text(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (const AnnotatedEpisode& e : runs[i].results) by_text[i][episode_text(e.scored.base.episode)] = &e;
    }

    std::vector<Alert> alerts;
    std::set<std::string> qualified_yesterday;
    for (std::size_t day = d_days - 1; day < runs.size(); ++day) {
        std::set<std::string> qualified_today;
        for (const auto& [text, entry] : by_text[day]) {
            std::vector<std::int64_t> freqs;
            freqs.reserve(d_days);
            bool present_throughout = true;
            for (std::size_t back = day + 1 - d_days; back <= day && present_throughout; ++back) {
                auto it = by_text[back].find(text);
                if (it == by_text[back].end()) {
                    present_throughout = false;
                } else {
                    freqs.push_back(it->second->scored.base.frequency);
                }
            }
            if (!present_throughout || !trend_qualifies(freqs, t)) continue;
            if (entry->scored.best < t.min_best || entry->scored.worst < t.min_worst) continue;
            qualified_today.insert(text);
            if (qualified_yesterday.count(text)) continue;  // already alerted, still qualifying

            Alert a;
            a.episode = text;
            for (std::size_t back = day + 1 - d_days, k = 0; back <= day; ++back, ++k) {
                a.trend.emplace_back(runs[back].date, freqs[k]);
            }
            a.triggering_day = runs[day].date;
            a.best = entry->scored.best;
            a.worst = entry->scored.worst;
            a.category = entry->category;
            alerts.push_back(std::move(a));
        }
        qualified_yesterday = std::move(qualified_today);
    }
    return alerts;
}

std::filesystem::path run_file_path(const std::filesystem::path& dir, Date d) {
    return dir / (format_date(d) + ".json");
}

void save_run(const DailyRun& run, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = run_file_path(dir, run.date);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write run file " + path.string());
    out << run_to_json(run).dump(2) << '\n';
    if (!out.flush()) throw std::runtime_error("failed writing run file " + path.string());
}

DailyRun load_run(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read run file " + file.string());
    try {
        return run_from_json(ordered_json::parse(in));
    } catch (const std::exception& err) {
        throw std::runtime_error("malformed run file " + file.string() + ": " + err.what());
    }
}

}  // namespace epimine
