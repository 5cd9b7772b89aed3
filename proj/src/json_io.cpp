#include "epimine/json_io.hpp"

namespace epimine {

ordered_json annotated_to_json(const AnnotatedEpisode& e) {
    ordered_json j;
    j["episode"] = episode_text(e.scored.base.episode);
    j["size"] = episode_size(e.scored.base.episode);
    j["frequency"] = e.scored.base.frequency;
    j["best"] = e.scored.best;
    j["worst"] = e.scored.worst;
    j["drop_confidences"] = e.scored.drop_confidences;
    j["category"] = to_string(e.category);
    j["tag"] = to_string(e.tag);
    return j;
}

AnnotatedEpisode annotated_from_json(const ordered_json& j) {
    AnnotatedEpisode e;
    e.scored.base.episode = parse_any_episode(j.at("episode").get<std::string>());
    e.scored.base.frequency = j.at("frequency").get<std::int64_t>();
    e.scored.best = j.at("best").get<double>();
    e.scored.worst = j.at("worst").get<double>();
    e.scored.drop_confidences = j.at("drop_confidences").get<std::vector<double>>();
    e.category = category_from_string(j.at("category").get<std::string>());
    e.tag = known_tag_from_string(j.at("tag").get<std::string>());
    return e;
}

ordered_json run_to_json(const DailyRun& run) {
    ordered_json j;
    j["date"] = format_date(run.date);
    j["window"] = {{"from", format_date(run.window_from)}, {"to", format_date(run.window_to)}};
    ordered_json results = ordered_json::array();
    for (const AnnotatedEpisode& e : run.results) results.push_back(annotated_to_json(e));
    j["results"] = std::move(results);
    return j;
}

DailyRun run_from_json(const ordered_json& j) {
    DailyRun run;
    run.date = parse_date(j.at("date").get<std::string>());
    run.window_from = parse_date(j.at("window").at("from").get<std::string>());
    run.window_to = parse_date(j.at("window").at("to").get<std::string>());
    for (const ordered_json& e : j.at("results")) run.results.push_back(annotated_from_json(e));
    return run;
}

ordered_json alert_to_json(const Alert& a) {
    ordered_json j;
    j["episode"] = a.episode;
    j["triggering_day"] = format_date(a.triggering_day);
    ordered_json trend = ordered_json::array();
    for (const auto& [date, freq] : a.trend) {
        trend.push_back(ordered_json{{"date", format_date(date)}, {"frequency", freq}});
    }
    j["trend"] = std::move(trend);
    j["best"] = a.best;
    j["worst"] = a.worst;
    j["category"] = to_string(a.category);
    return j;
}

}  // namespace epimine
