#pragma once

#include "json.hpp"

#include "epimine/alerts.hpp"
#include "epimine/postfilter.hpp"

namespace epimine {

/// Key order is preserved everywhere so serialized output is byte-stable.
using ordered_json = nlohmann::ordered_json;

ordered_json annotated_to_json(const AnnotatedEpisode& e);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed
/// input.
AnnotatedEpisode annotated_from_json(const ordered_json& j);

ordered_json run_to_json(const DailyRun& run);
DailyRun run_from_json(const ordered_json& j);

ordered_json alert_to_json(const Alert& a);

}  // namespace epimine
