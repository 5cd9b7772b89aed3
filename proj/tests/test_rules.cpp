#include "doctest.h"

#include <random>
#include <stdexcept>

#include "epimine/mining.hpp"
#include "epimine/rules.hpp"
#include "test_helpers.hpp"

using namespace epimine;
using epimine::test::plain;
using epimine::test::random_sequence;
using epimine::test::worked_sequence;

TEST_CASE("rule confidence is the frequency ratio, in percent") {
    CHECK(rule_confidence(2, 4) == doctest::Approx(50.0));
    CHECK(rule_confidence(3, 3) == doctest::Approx(100.0));
    CHECK(rule_confidence(0, 5) == doctest::Approx(0.0));
    CHECK(rule_confidence(7, 0) == doctest::Approx(0.0));  // guarded division
}

TEST_CASE("scoring A->B->C on the worked sequence") {
    const EventSequence seq = worked_sequence();
    MiningConfig cfg;
    cfg.threshold = 2;
    const std::vector<FrequentEpisode> mined = mine(seq, cfg);
    FrequencyTable table(mined, seq, {});

    const FrequentEpisode abc{AnyEpisode{plain({"A", "B", "C"})}, 2};
    const ScoredEpisode scored = score_episode(abc, table);
    // All three two-node subepisodes also have frequency 2.
    REQUIRE(scored.drop_confidences.size() == 3);
    for (double c : scored.drop_confidences) CHECK(c == doctest::Approx(100.0));
    CHECK(scored.best == doctest::Approx(100.0));
    CHECK(scored.worst == doctest::Approx(100.0));
}

TEST_CASE("scoring falls back to on-demand counting for unmined subepisodes") {
    // E -> C occurs once; its subepisodes E and C were never mined at
    // threshold 2, so the table has to count them on demand.
    const EventSequence seq = worked_sequence();
    FrequencyTable table({}, seq, {});
    const FrequentEpisode ec{AnyEpisode{plain({"E", "C"})}, 1};
    const ScoredEpisode scored = score_episode(ec, table);
    REQUIRE(scored.drop_confidences.size() == 2);
    CHECK(scored.drop_confidences[0] == doctest::Approx(50.0));   // drop E: f(C)=2
    CHECK(scored.drop_confidences[1] == doctest::Approx(100.0));  // drop C: f(E)=1
    CHECK(scored.best == doctest::Approx(100.0));
    CHECK(scored.worst == doctest::Approx(50.0));
}

TEST_CASE("single-node episodes cannot be scored") {
    const EventSequence seq = worked_sequence();
    FrequencyTable table({}, seq, {});
    CHECK_THROWS_AS(score_episode(FrequentEpisode{AnyEpisode{plain({"A"})}, 2}, table), std::invalid_argument);

    // score_all silently skips them instead.
    const std::vector<FrequentEpisode> mixed = {
        FrequentEpisode{AnyEpisode{plain({"A"})}, 2},
        FrequentEpisode{AnyEpisode{plain({"A", "B"})}, 2},
    };
    const std::vector<ScoredEpisode> scored = score_all(mixed, table);
    REQUIRE(scored.size() == 1);
    CHECK(episode_text(scored[0].base.episode) == "A -> B");
}

TEST_CASE("confidences never leave [0, 100] and best dominates worst") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 60; ++trial) {
        const EventSequence seq = random_sequence(rng);
        MiningConfig cfg;
        cfg.threshold = 1;
        cfg.max_size = 3;
        const std::vector<FrequentEpisode> mined = mine(seq, cfg);
        FrequencyTable table(mined, seq, {});
        for (const ScoredEpisode& s : score_all(mined, table)) {
            CHECK(s.worst <= s.best);
            for (double c : s.drop_confidences) {
                CHECK(c >= 0.0);
                CHECK(c <= 100.0);  // a subepisode is at least as frequent (no expiry in play)
            }
        }
    }
}

TEST_CASE("confidences are scale-free: replaying the sequence twice changes nothing") {
    std::mt19937 rng(1357911);
    for (int trial = 0; trial < 40; ++trial) {
        const EventSequence seq = random_sequence(rng);
        if (seq.empty()) continue;
        // Replay the whole day once more, far enough out that no occurrence
        // can straddle the seam under the expiry limit.
        const ExpiryPolicy exp{Seconds{50}, SpanMode::start_to_start};
        const Seconds shift = seq.events().back().start + *exp.limit + 1;
        std::vector<RawEvent> doubled;
        for (const Event& e : seq.events()) doubled.push_back({seq.label(e.type), e.start, e.end});
        for (const Event& e : seq.events()) {
            doubled.push_back({seq.label(e.type), e.start + shift, e.end + shift});
        }
        const EventSequence twice = make_sequence(doubled);

        MiningConfig cfg;
        cfg.threshold = 1;
        cfg.max_size = 3;
        cfg.expiry = exp;
        const std::vector<FrequentEpisode> mined = mine(seq, cfg);
        FrequencyTable once_table(mined, seq, exp);
        FrequencyTable twice_table({}, twice, exp);
        for (const FrequentEpisode& f : mined) {
            if (f.size() < 2) continue;
            const std::int64_t f2 = twice_table.frequency(f.episode);
            CHECK(f2 == 2 * f.frequency);
            const ScoredEpisode a = score_episode(f, once_table);
            const ScoredEpisode b = score_episode(FrequentEpisode{f.episode, f2}, twice_table);
            REQUIRE(a.drop_confidences.size() == b.drop_confidences.size());
            for (std::size_t i = 0; i < a.drop_confidences.size(); ++i) {
                CHECK(a.drop_confidences[i] == doctest::Approx(b.drop_confidences[i]));
            }
        }
    }
}

TEST_CASE("filter_by_scores keeps inclusive bounds and preserves order") {
    auto make = [](const char* a, const char* b, double best, double worst) {
        ScoredEpisode s;
        s.base = FrequentEpisode{AnyEpisode{plain({a, b})}, 1};
        s.best = best;
        s.worst = worst;
        return s;
    };
    const std::vector<ScoredEpisode> scored = {
        make("A", "B", 100.0, 50.0),
        make("B", "C", 75.0, 25.0),
        make("C", "D", 74.9, 25.0),
        make("D", "E", 75.0, 24.9),
    };
    const std::vector<ScoredEpisode> kept = filter_by_scores(scored, 75.0, 25.0);
    REQUIRE(kept.size() == 2);
    CHECK(episode_text(kept[0].base.episode) == "A -> B");
    CHECK(episode_text(kept[1].base.episode) == "B -> C");
    CHECK(filter_by_scores(scored, 0.0, 0.0).size() == 4);
}
