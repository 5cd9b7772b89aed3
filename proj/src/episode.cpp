#include "epimine/episode.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace epimine {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_arrows(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t arrow = text.find("->", pos);
        if (arrow == std::string_view::npos) {
            parts.push_back(trim(text.substr(pos)));
            break;
        }
        parts.push_back(trim(text.substr(pos, arrow - pos)));
        pos = arrow + 2;
    }
    return parts;
}

Seconds parse_number(std::string_view s) {
    Seconds value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0) {
        throw std::invalid_argument("bad duration bound: \"" + std::string(s) + "\"");
    }
    return value;
}

Interval parse_interval(std::string_view token) {
    token = trim(token);
    if (token.empty()) throw std::invalid_argument("empty interval");
    if (token.front() == '>') {
        Seconds n = parse_number(trim(token.substr(1)));
        return Interval{n + 1, Interval::kUnbounded};
    }
    if (token.back() == '+') {
        Seconds lo = parse_number(trim(token.substr(0, token.size() - 1)));
        return Interval{lo, Interval::kUnbounded};
    }
    std::size_t dash = token.find('-');
    if (dash == std::string_view::npos) {
        Seconds v = parse_number(token);  // single value means [v, v]
        return Interval{v, v};
    }
    Seconds lo = parse_number(trim(token.substr(0, dash)));
    Seconds hi = parse_number(trim(token.substr(dash + 1)));
    return Interval{lo, hi};
}

std::string interval_text(const Interval& iv) {
    if (iv.hi == Interval::kUnbounded) {
        if (iv.lo > 0) return ">" + std::to_string(iv.lo - 1);
        return "0+";
    }
    return std::to_string(iv.lo) + "-" + std::to_string(iv.hi);
}

void check_no_brackets(std::string_view label, std::string_view text) {
    if (label.empty()) throw std::invalid_argument("empty episode node in \"" + std::string(text) + "\"");
    if (label.find_first_of("[]") != std::string_view::npos) {
        throw std::invalid_argument("unexpected bracket in node \"" + std::string(label) + "\"");
    }
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].hi < members_[i].lo) {
            throw std::invalid_argument("interval has upper bound below lower bound: " + interval_text(members_[i]));
        }
        if (i > 0 && members_[i - 1].hi >= members_[i].lo) {
            throw std::invalid_argument("overlapping intervals: " + interval_text(members_[i - 1]) + " and " +
                                        interval_text(members_[i]));
        }
    }
}

bool IntervalSet::contains(Seconds d) const {
    // First member whose lo exceeds d; the candidate is its predecessor.
    auto it = std::upper_bound(members_.begin(), members_.end(), d,
                               [](Seconds value, const Interval& iv) { return value < iv.lo; });
    return it != members_.begin() && std::prev(it)->contains(d);
}

std::string IntervalSet::text() const {
    std::string out;
    for (const Interval& iv : members_) {
        if (!out.empty()) out += ",";
        out += interval_text(iv);
    }
    return out;
}

IntervalSet IntervalSet::parse(std::string_view body) {
    std::vector<Interval> members;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        members.push_back(parse_interval(body.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return IntervalSet(std::move(members));
}

std::string Episode::text() const {
    std::string out;
    for (const std::string& n : nodes) {
        if (!out.empty()) out += " -> ";
        out += n;
    }
    return out;
}

std::string GeneralizedEpisode::text() const {
    std::string out;
    for (const GeneralizedNode& n : nodes) {
        if (!out.empty()) out += " -> ";
        out += n.label + "[" + n.dwell.text() + "]";
    }
    return out;
}

std::size_t episode_size(const AnyEpisode& e) {
    return std::visit([](const auto& ep) { return ep.size(); }, e);
}

std::string episode_text(const AnyEpisode& e) {
    return std::visit([](const auto& ep) { return ep.text(); }, e);
}

std::vector<std::string> node_labels(const AnyEpisode& e) {
    if (const auto* plain = std::get_if<Episode>(&e)) return plain->nodes;
    std::vector<std::string> labels;
    for (const GeneralizedNode& n : std::get<GeneralizedEpisode>(e).nodes) labels.push_back(n.label);
    return labels;
}

namespace {

template <class Node>
bool ordered_subsequence(const std::vector<Node>& beta, const std::vector<Node>& alpha) {
    std::size_t b = 0;
    for (std::size_t a = 0; a < alpha.size() && b < beta.size(); ++a) {
        if (alpha[a] == beta[b]) ++b;
    }
    return b == beta.size();
}

template <class E>
E drop_node_impl(const E& alpha, std::size_t i) {
    if (alpha.nodes.size() <= 1) throw std::invalid_argument("cannot drop the only node of an episode");
    if (i >= alpha.nodes.size()) throw std::out_of_range("drop_node: index " + std::to_string(i) + " out of range");
    E out = alpha;
    out.nodes.erase(out.nodes.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

}  // namespace

bool subepisode(const Episode& beta, const Episode& alpha) { return ordered_subsequence(beta.nodes, alpha.nodes); }

bool subepisode(const GeneralizedEpisode& beta, const GeneralizedEpisode& alpha) {
    return ordered_subsequence(beta.nodes, alpha.nodes);
}

bool subepisode(const AnyEpisode& beta, const AnyEpisode& alpha) {
    if (beta.index() != alpha.index()) return false;
    if (const auto* plain = std::get_if<Episode>(&beta)) return subepisode(*plain, std::get<Episode>(alpha));
    return subepisode(std::get<GeneralizedEpisode>(beta), std::get<GeneralizedEpisode>(alpha));
}

Episode drop_node(const Episode& alpha, std::size_t i) { return drop_node_impl(alpha, i); }

GeneralizedEpisode drop_node(const GeneralizedEpisode& alpha, std::size_t i) { return drop_node_impl(alpha, i); }

AnyEpisode drop_node(const AnyEpisode& alpha, std::size_t i) {
    return std::visit([i](const auto& ep) -> AnyEpisode { return drop_node_impl(ep, i); }, alpha);
}

Episode parse_episode(std::string_view text) {
    Episode out;
    for (std::string_view part : split_arrows(text)) {
        check_no_brackets(part, text);
        out.nodes.emplace_back(part);
    }
    return out;
}

GeneralizedEpisode parse_generalized(std::string_view text) {
    GeneralizedEpisode out;
    for (std::string_view part : split_arrows(text)) {
        std::size_t open = part.find('[');
        if (open == std::string_view::npos || part.back() != ']') {
            throw std::invalid_argument("node \"" + std::string(part) + "\" needs a [duration] part");
        }
        std::string_view label = trim(part.substr(0, open));
        check_no_brackets(label, text);
        IntervalSet dwell = IntervalSet::parse(part.substr(open + 1, part.size() - open - 2));
        out.nodes.push_back(GeneralizedNode{std::string(label), std::move(dwell)});
    }
    return out;
}

AnyEpisode parse_any_episode(std::string_view text) {
    if (text.find('[') != std::string_view::npos) return parse_generalized(text);
    return parse_episode(text);
}

}  // namespace epimine
