#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "epimine/mining.hpp"
#include "test_helpers.hpp"

using namespace epimine;
using epimine::test::plain;
using epimine::test::random_sequence;
using epimine::test::worked_sequence;

namespace {

std::map<std::string, std::int64_t> by_text(const std::vector<FrequentEpisode>& mined) {
    std::map<std::string, std::int64_t> out;
    for (const FrequentEpisode& f : mined) out[episode_text(f.episode)] = f.frequency;
    return out;
}

}  // namespace

TEST_CASE("auto_threshold follows max(1, ceil(T / (M * N)))") {
    CHECK(auto_threshold(10, 6, 3) == 1);
    CHECK(auto_threshold(0, 6, 2) == 1);
    CHECK(auto_threshold(10080, 100, 2) == 51);
    CHECK(auto_threshold(10080, 100, 1) == 101);
    CHECK(auto_threshold(200, 100, 2) == 1);
    CHECK(auto_threshold(201, 100, 2) == 2);
    CHECK_THROWS_AS(auto_threshold(10, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(auto_threshold(10, 5, 0), std::invalid_argument);
}

TEST_CASE("mining the worked sequence at threshold 2 finds A->B->C and its parts") {
    MiningConfig cfg;
    cfg.threshold = 2;
    cfg.max_size = 3;
    const auto mined = by_text(mine(worked_sequence(), cfg));
    CHECK(mined.at("A -> B -> C") == 2);
    CHECK(mined.at("A -> B") == 2);
    CHECK(mined.at("A -> C") == 2);
    CHECK(mined.at("B -> C") == 2);
    CHECK(mined.at("A") == 2);
    CHECK(mined.at("B") == 2);
    CHECK(mined.at("C") == 2);
    CHECK(mined.count("E") == 0);  // below threshold
}

TEST_CASE("mining respects max_size") {
    MiningConfig cfg;
    cfg.threshold = 2;
    cfg.max_size = 1;
    for (const FrequentEpisode& f : mine(worked_sequence(), cfg)) CHECK(f.size() == 1);
    cfg.max_size = 2;
    std::size_t largest = 0;
    for (const FrequentEpisode& f : mine(worked_sequence(), cfg)) largest = std::max(largest, f.size());
    CHECK(largest == 2);
    MiningConfig zero;
    zero.max_size = 0;
    CHECK_THROWS_AS(mine(worked_sequence(), zero), std::invalid_argument);
}

TEST_CASE("mining an empty sequence yields nothing") {
    CHECK(mine(make_sequence({}), MiningConfig{}).empty());
}

TEST_CASE("every reported episode's frequency clears the threshold") {
    std::mt19937 rng(2209);
    for (int trial = 0; trial < 50; ++trial) {
        const EventSequence seq = random_sequence(rng);
        MiningConfig cfg;
        cfg.threshold = 2;
        cfg.max_size = 3;
        cfg.expiry = epimine::test::random_expiry(rng, /*allow_end_to_start=*/false);
        for (const FrequentEpisode& f : mine(seq, cfg)) {
            CHECK(f.frequency >= 2);
            CHECK(f.frequency == count_any(seq, f.episode, cfg.expiry).frequency);
        }
    }
}

TEST_CASE("with a fixed threshold the mined set is downward closed") {
    std::mt19937 rng(77321);
    for (int trial = 0; trial < 40; ++trial) {
        const EventSequence seq = random_sequence(rng);
        MiningConfig cfg;
        cfg.threshold = 2;
        cfg.max_size = 3;
        const std::vector<FrequentEpisode> mined = mine(seq, cfg);
        std::set<std::string> present;
        for (const FrequentEpisode& f : mined) present.insert(episode_text(f.episode));
        for (const FrequentEpisode& f : mined) {
            if (f.size() < 2) continue;
            for (std::size_t i = 0; i < f.size(); ++i) {
                const std::string sub = episode_text(drop_node(f.episode, i));
                CAPTURE(episode_text(f.episode));
                CAPTURE(sub);
                CHECK(present.count(sub) == 1);
            }
        }
    }
}

TEST_CASE("mining with a fixed threshold finds exactly the brute-force frequent pairs") {
    std::mt19937 rng(443322);
    for (int trial = 0; trial < 40; ++trial) {
        const EventSequence seq = random_sequence(rng);
        MiningConfig cfg;
        cfg.threshold = 2;
        cfg.max_size = 2;
        std::set<std::string> mined_pairs;
        for (const FrequentEpisode& f : mine(seq, cfg)) {
            if (f.size() == 2) mined_pairs.insert(episode_text(f.episode));
        }
        std::set<std::string> expected;
        for (const std::string& x : seq.alphabet()) {
            for (const std::string& y : seq.alphabet()) {
                const Episode pair{{x, y}};
                if (count_non_overlapped(seq, pair).frequency >= 2) expected.insert(pair.text());
            }
        }
        CHECK(mined_pairs == expected);
    }
}

TEST_CASE("generalized mining separates fast and slow variants of a chain") {
    // Fast A (30 s) leads to B, slow A (400 s) doesn't.
    std::vector<RawEvent> raw;
    Seconds t = 0;
    for (int i = 0; i < 6; ++i) {
        raw.push_back({"A", t, t + 30});
        raw.push_back({"B", t + 60, t + 90});
        t += 10'000;
    }
    for (int i = 0; i < 6; ++i) {
        raw.push_back({"A", t, t + 400});
        t += 10'000;
    }
    const EventSequence seq = make_sequence(raw);
    MiningConfig cfg;
    cfg.mode = MiningConfig::Mode::generalized;
    cfg.threshold = 6;
    cfg.max_size = 2;
    cfg.expiry = ExpiryPolicy{Seconds{200}, SpanMode::start_to_start};
    const auto mined = by_text(mine(seq, cfg));
    CHECK(mined.count("A[1-120] -> B[1-120]") == 1);
    CHECK(mined.count("A[121-600] -> B[1-120]") == 0);
    CHECK(mined.at("A[1-120]") == 6);
    CHECK(mined.at("A[121-600]") == 6);
}

TEST_CASE("auto thresholds are recomputed per level") {
    // 36 events over 3 types: level-1 threshold ceil(36/3)=12, level-2
    // ceil(36/6)=6. A->B occurs 12 times, so it must clear level 2 even
    // though 12 also equals the level-1 bar.
    std::vector<RawEvent> raw;
    Seconds t = 0;
    for (int i = 0; i < 12; ++i) {
        raw.push_back({"A", t, t});
        raw.push_back({"B", t + 1, t + 1});
        raw.push_back({"C", t + 2, t + 2});
        t += 100;
    }
    const EventSequence seq = make_sequence(raw);
    MiningConfig cfg;
    cfg.max_size = 2;
    const auto mined = by_text(mine(seq, cfg));
    CHECK(mined.at("A") == 12);
    CHECK(mined.at("A -> B") == 12);
}
