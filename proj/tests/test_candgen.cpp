#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "epimine/candgen.hpp"
#include "epimine/counting.hpp"
#include "test_helpers.hpp"

using namespace epimine;
using epimine::test::plain;
using epimine::test::random_sequence;
using epimine::test::worked_sequence;

namespace {

Level level_of(std::size_t n, std::vector<Episode> episodes) {
    Level level{n, {}};
    for (Episode& e : episodes) level.frequent.push_back(FrequentEpisode{AnyEpisode{std::move(e)}, 1});
    std::sort(level.frequent.begin(), level.frequent.end(),
              [](const FrequentEpisode& a, const FrequentEpisode& b) { return a.episode < b.episode; });
    return level;
}

std::set<std::string> texts(const std::vector<AnyEpisode>& episodes) {
    std::set<std::string> out;
    for (const AnyEpisode& e : episodes) out.insert(episode_text(e));
    return out;
}

}  // namespace

TEST_CASE("level-1 seeding is the event-type histogram") {
    const EventSequence seq = worked_sequence();
    const Level all = seed_level_one(seq, 1);
    REQUIRE(all.frequent.size() == 6);
    std::map<std::string, std::int64_t> counts;
    for (const FrequentEpisode& f : all.frequent) counts[episode_text(f.episode)] = f.frequency;
    CHECK(counts == std::map<std::string, std::int64_t>{{"A", 2}, {"B", 2}, {"C", 2}, {"D", 2}, {"E", 1}, {"F", 1}});

    const Level thresholded = seed_level_one(seq, 2);
    CHECK(thresholded.frequent.size() == 4);  // E and F fall out
    for (const FrequentEpisode& f : thresholded.frequent) CHECK(f.frequency >= 2);
}

TEST_CASE("level-1 seeding in generalized mode splits by duration bucket") {
    const EventSequence seq = make_sequence({{"A", 0, 30}, {"A", 100, 400}, {"A", 1000, 1030}, {"B", 2000, 2000}});
    const std::vector<IntervalSet> buckets = {IntervalSet::parse("1-120"), IntervalSet::parse("121-600")};
    const Level level = seed_level_one(seq, 1, buckets);
    std::map<std::string, std::int64_t> counts;
    for (const FrequentEpisode& f : level.frequent) counts[episode_text(f.episode)] = f.frequency;
    // The zero-duration B falls in no bucket at all.
    CHECK(counts == std::map<std::string, std::int64_t>{{"A[1-120]", 2}, {"A[121-600]", 1}});
}

TEST_CASE("a single-bucket [0-0] seeding matches plain mode on instantaneous events") {
    const EventSequence seq = worked_sequence();
    const Level plain_level = seed_level_one(seq, 1);
    const Level bucketed = seed_level_one(seq, 1, {IntervalSet::parse("0-0")});
    REQUIRE(bucketed.frequent.size() == plain_level.frequent.size());
    for (std::size_t i = 0; i < bucketed.frequent.size(); ++i) {
        CHECK(bucketed.frequent[i].frequency == plain_level.frequent[i].frequency);
    }
}

TEST_CASE("two single-node episodes join into all four ordered pairs") {
    const Level level = level_of(1, {plain({"A"}), plain({"B"})});
    CHECK(texts(generate_candidates(level)) ==
          std::set<std::string>{"A -> A", "A -> B", "B -> A", "B -> B"});
}

TEST_CASE("the suffix-prefix join only emits candidates with frequent parts") {
    SUBCASE("A->B and B->C join, but A->C is missing, so nothing survives") {
        const Level level = level_of(2, {plain({"A", "B"}), plain({"B", "C"})});
        CHECK(generate_candidates(level).empty());
    }
    SUBCASE("with A->C present the candidate A->B->C survives the prune") {
        const Level level = level_of(2, {plain({"A", "B"}), plain({"B", "C"}), plain({"A", "C"})});
        CHECK(texts(generate_candidates(level)) == std::set<std::string>{"A -> B -> C"});
    }
}

TEST_CASE("candidates come out deduplicated, sorted and one node longer") {
    const Level level = level_of(1, {plain({"B"}), plain({"A"}), plain({"C"})});
    const std::vector<AnyEpisode> cands = generate_candidates(level);
    CHECK(cands.size() == 9);
    CHECK(std::is_sorted(cands.begin(), cands.end()));
    CHECK(std::adjacent_find(cands.begin(), cands.end()) == cands.end());
    for (const AnyEpisode& c : cands) CHECK(episode_size(c) == 2);
}

TEST_CASE("the candidate filter drops candidates before they are counted") {
    const Level level = level_of(1, {plain({"A"}), plain({"B"})});
    const std::vector<AnyEpisode> cands =
        generate_candidates(level, [](const AnyEpisode& e) { return node_labels(e).front() == "A"; });
    CHECK(texts(cands) == std::set<std::string>{"A -> A", "A -> B"});
}

TEST_CASE("mixed or mis-sized levels are rejected") {
    Level bad = level_of(2, {plain({"A", "B"})});
    bad.frequent.push_back(FrequentEpisode{AnyEpisode{plain({"C"})}, 1});
    CHECK_THROWS_AS(generate_candidates(bad), std::invalid_argument);

    Level mixed = level_of(1, {plain({"A"})});
    mixed.frequent.push_back(FrequentEpisode{AnyEpisode{parse_generalized("B[1-2]")}, 1});
    CHECK_THROWS_AS(generate_candidates(mixed), std::invalid_argument);

    CHECK(generate_candidates(Level{3, {}}).empty());
}

TEST_CASE("generalized candidates treat (label, intervals) as the node identity") {
    const GeneralizedEpisode a = parse_generalized("A[1-120]");
    const GeneralizedEpisode b = parse_generalized("A[121-600]");
    Level level{1, {FrequentEpisode{AnyEpisode{a}, 1}, FrequentEpisode{AnyEpisode{b}, 1}}};
    std::sort(level.frequent.begin(), level.frequent.end(),
              [](const FrequentEpisode& x, const FrequentEpisode& y) { return x.episode < y.episode; });
    CHECK(texts(generate_candidates(level)) ==
          std::set<std::string>{"A[1-120] -> A[1-120]", "A[1-120] -> A[121-600]", "A[121-600] -> A[1-120]",
                                "A[121-600] -> A[121-600]"});
}

TEST_CASE("every truly frequent episode appears among the generated candidates") {
    // Completeness at one level: count all two-node episodes by brute
    // force; every one reaching the threshold must be generated from the
    // frequent singles.
    std::mt19937 rng(160914);
    for (int trial = 0; trial < 60; ++trial) {
        const EventSequence seq = random_sequence(rng);
        if (seq.empty()) continue;
        const std::int64_t threshold = 2;
        const Level level1 = seed_level_one(seq, threshold);
        const std::set<std::string> generated = texts(generate_candidates(level1));
        for (const std::string& x : seq.alphabet()) {
            for (const std::string& y : seq.alphabet()) {
                const Episode pair{{x, y}};
                if (count_non_overlapped(seq, pair).frequency >= threshold) {
                    CAPTURE(pair.text());
                    CHECK(generated.count(pair.text()) == 1);
                }
            }
        }
    }
}
