#include "epimine/report.hpp"

#include <algorithm>
#include <cstdio>

namespace epimine {
namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

std::string describe(const std::string& label, const std::map<std::string, std::string>& descriptions) {
    auto it = descriptions.find(label);
    return it == descriptions.end() ? std::string() : it->second;
}

}  // namespace

std::vector<AnnotatedEpisode> sort_for_report(std::vector<AnnotatedEpisode> episodes) {
    std::stable_sort(episodes.begin(), episodes.end(), [](const AnnotatedEpisode& a, const AnnotatedEpisode& b) {
        if (a.scored.base.frequency != b.scored.base.frequency) {
            return a.scored.base.frequency > b.scored.base.frequency;
        }
        if (a.scored.best != b.scored.best) return a.scored.best > b.scored.best;
        return episode_text(a.scored.base.episode) < episode_text(b.scored.base.episode);
    });
    return episodes;
}

std::string render_pair_csv(const std::vector<AnnotatedEpisode>& episodes,
                            const std::map<std::string, std::string>& descriptions) {
    std::string out =
        "frequency,first_code,first_description,first_confidence_pct,"
        "second_code,second_description,second_confidence_pct\n";
    for (const AnnotatedEpisode& e : episodes) {
        if (episode_size(e.scored.base.episode) != 2) continue;
        const std::vector<std::string> labels = node_labels(e.scored.base.episode);
        // drop_confidences[1] belongs to the subepisode that kept the first
        // node (the second was dropped), and vice versa.
        out += std::to_string(e.scored.base.frequency);
        out += ',' + csv_field(labels[0]);
        out += ',' + csv_field(describe(labels[0], descriptions));
        out += ',' + percent(e.scored.drop_confidences[1]);
        out += ',' + csv_field(labels[1]);
        out += ',' + csv_field(describe(labels[1], descriptions));
        out += ',' + percent(e.scored.drop_confidences[0]);
        out += '\n';
    }
    return out;
}

ordered_json render_json_report(const AnalysisResult& analysis, const std::vector<AnnotatedEpisode>& episodes,
                                const RunConfig& cfg, const EventSequence& seq) {
    ordered_json params;
    params["mode"] = cfg.mining.mode == MiningConfig::Mode::generalized ? "generalized" : "plain";
    params["granularity"] = std::string(to_string(cfg.prefilter.granularity));
    if (cfg.mining.mode == MiningConfig::Mode::generalized) {
        ordered_json buckets = ordered_json::array();
        for (const IntervalSet& b : cfg.mining.buckets) buckets.push_back(b.text());
        params["buckets"] = std::move(buckets);
    }
    params["span_mode"] = cfg.mining.expiry.span_mode == SpanMode::start_to_start ? "start_to_start"
                          : cfg.mining.expiry.span_mode == SpanMode::end_to_start ? "end_to_start"
                                                                                  : "full_span";
    params["expiry_limit"] = cfg.mining.expiry.limit ? ordered_json(*cfg.mining.expiry.limit) : ordered_json(nullptr);
    params["threshold"] = cfg.mining.threshold ? ordered_json(*cfg.mining.threshold) : ordered_json("auto");
    params["max_size"] = cfg.mining.max_size;
    params["error_prob"] = cfg.mining.error_prob;
    params["min_best"] = cfg.scores.min_best;
    params["min_worst"] = cfg.scores.min_worst;
    params["restrict_category"] =
        cfg.restrict_category ? ordered_json(std::string(to_string(*cfg.restrict_category))) : ordered_json(nullptr);

    ordered_json sequence;
    sequence["events"] = seq.size();
    sequence["alphabet"] = seq.alphabet_size();
    if (auto span = seq.span()) {
        sequence["first_start"] = span->first;
        sequence["last_start"] = span->second;
    }

    ordered_json singles = ordered_json::array();
    for (const FrequentEpisode& f : analysis.frequent) {
        if (f.size() != 1) continue;
        singles.push_back(ordered_json{{"episode", episode_text(f.episode)}, {"frequency", f.frequency}});
    }

    ordered_json rows = ordered_json::array();
    for (const AnnotatedEpisode& e : episodes) rows.push_back(annotated_to_json(e));

    ordered_json flagged = ordered_json::array();
    for (const AnnotatedEpisode& e : analysis.flagged) flagged.push_back(episode_text(e.scored.base.episode));

    ordered_json report;
    report["parameters"] = std::move(params);
    report["sequence"] = std::move(sequence);
    report["single_events"] = std::move(singles);
    report["episodes"] = std::move(rows);
    report["flagged_well_known"] = std::move(flagged);
    report["diagnostics"] = analysis.diagnostics;
    return report;
}

std::string render_occurrences_jsonl(const EventSequence& seq, const AnyEpisode& episode,
                                     const std::vector<std::vector<std::size_t>>& occurrences) {
    const std::string text = episode_text(episode);
    std::string out;
    for (const std::vector<std::size_t>& occ : occurrences) {
        ordered_json j;
        j["episode"] = text;
        ordered_json events = ordered_json::array();
        for (std::size_t idx : occ) {
            const Event& e = seq.events()[idx];
            events.push_back(ordered_json{
                {"index", idx}, {"type", seq.label(e.type)}, {"start", e.start}, {"end", e.end}});
        }
        j["events"] = std::move(events);
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string render_alert_table(const std::vector<Alert>& alerts) {
    if (alerts.empty()) return "no alerts\n";
    std::string out = "day         episode                                   trend                 scores\n";
    for (const Alert& a : alerts) {
        std::string trend;
        for (const auto& [date, freq] : a.trend) {
            if (!trend.empty()) trend += " -> ";
            trend += std::to_string(freq);
        }
        char line[256];
        std::snprintf(line, sizeof line, "%s  %-40s  %-20s  best %.2f worst %.2f\n",
                      format_date(a.triggering_day).c_str(), a.episode.c_str(), trend.c_str(), a.best, a.worst);
        out += line;
    }
    return out;
}

}  // namespace epimine
