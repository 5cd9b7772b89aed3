#include "epimine/candgen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace epimine {
namespace {

Level finish_level(std::size_t n, std::vector<FrequentEpisode> frequent) {
    std::sort(frequent.begin(), frequent.end(),
              [](const FrequentEpisode& a, const FrequentEpisode& b) { return a.episode < b.episode; });
    return Level{n, std::move(frequent)};
}

template <class E>
std::vector<E> join_and_prune(std::vector<E> freq, const CandidateFilter& keep) {
    std::sort(freq.begin(), freq.end());
    freq.erase(std::unique(freq.begin(), freq.end()), freq.end());
    if (freq.empty()) return {};
    const std::size_t n = freq.front().nodes.size();

    auto joinable = [n](const E& a, const E& b) {
        return std::equal(a.nodes.begin() + 1, a.nodes.end(), b.nodes.begin(), b.nodes.begin() + (n - 1));
    };
    std::vector<E> out;
    for (const E& a : freq) {
        for (const E& b : freq) {
            if (!joinable(a, b)) continue;
            E cand = a;
            cand.nodes.push_back(b.nodes.back());
            bool all_subs_frequent = true;
            for (std::size_t i = 0; i <= n && all_subs_frequent; ++i) {
                all_subs_frequent = std::binary_search(freq.begin(), freq.end(), drop_node(cand, i));
            }
            if (!all_subs_frequent) continue;
            if (keep && !keep(AnyEpisode{cand})) continue;
            out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Level seed_level_one(const EventSequence& seq, std::int64_t threshold, const std::vector<IntervalSet>& buckets) {
    std::vector<FrequentEpisode> frequent;
    if (buckets.empty()) {
        std::vector<std::int64_t> counts(seq.alphabet_size(), 0);
        for (const Event& e : seq.events()) ++counts[static_cast<std::size_t>(e.type)];
        for (std::size_t t = 0; t < counts.size(); ++t) {
            if (counts[t] < threshold) continue;
            frequent.push_back(FrequentEpisode{Episode{{seq.alphabet()[t]}}, counts[t]});
        }
    } else {
        // counts[(type, bucket index)]; buckets may overlap, in which case an
        // event is counted under every bucket that contains its duration.
        std::map<std::pair<EventTypeId, std::size_t>, std::int64_t> counts;
        for (const Event& e : seq.events()) {
            for (std::size_t b = 0; b < buckets.size(); ++b) {
                if (buckets[b].contains(dwelling_time(e))) ++counts[{e.type, b}];
            }
        }
        for (const auto& [key, count] : counts) {
            if (count < threshold) continue;
            GeneralizedNode node{seq.alphabet()[static_cast<std::size_t>(key.first)], buckets[key.second]};
            frequent.push_back(FrequentEpisode{GeneralizedEpisode{{std::move(node)}}, count});
        }
    }
    return finish_level(1, std::move(frequent));
}

std::vector<AnyEpisode> generate_candidates(const Level& level, const CandidateFilter& keep) {
    if (level.frequent.empty()) return {};
    const bool generalized = std::holds_alternative<GeneralizedEpisode>(level.frequent.front().episode);
    std::vector<Episode> plain;
    std::vector<GeneralizedEpisode> duration_aware;
    for (const FrequentEpisode& f : level.frequent) {
        if (episode_size(f.episode) != level.n) {
            throw std::invalid_argument("level " + std::to_string(level.n) + " contains an episode of size " +
                                        std::to_string(episode_size(f.episode)));
        }
        if (std::holds_alternative<GeneralizedEpisode>(f.episode) != generalized) {
            throw std::invalid_argument("level mixes plain and duration-aware episodes");
        }
        if (generalized) {
            duration_aware.push_back(std::get<GeneralizedEpisode>(f.episode));
        } else {
            plain.push_back(std::get<Episode>(f.episode));
        }
    }
    std::vector<AnyEpisode> out;
    if (generalized) {
        for (auto& e : join_and_prune(std::move(duration_aware), keep)) out.emplace_back(std::move(e));
    } else {
        for (auto& e : join_and_prune(std::move(plain), keep)) out.emplace_back(std::move(e));
    }
    return out;
}

}  // namespace epimine
