#include "doctest.h"

#include <stdexcept>

#include "epimine/episode.hpp"
#include "test_helpers.hpp"

using namespace epimine;
using epimine::test::plain;

TEST_CASE("episode text round-trips") {
    const Episode e = plain({"ST1_Jam", "ST2_Jam", "ST1_Jam"});
    CHECK(e.text() == "ST1_Jam -> ST2_Jam -> ST1_Jam");
    CHECK(parse_episode(e.text()) == e);
    CHECK(parse_episode("  A  ->B ") == plain({"A", "B"}));
}

TEST_CASE("parse_episode rejects empty nodes and stray brackets") {
    CHECK_THROWS_AS(parse_episode(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_episode("A -> -> B"), std::invalid_argument);
    CHECK_THROWS_AS(parse_episode("A ->"), std::invalid_argument);
    CHECK_THROWS_AS(parse_episode("A[1-2] -> B"), std::invalid_argument);
}

TEST_CASE("interval sets contain exactly their members") {
    const IntervalSet s({Interval{1, 120}, Interval{601, 1800}});
    CHECK_FALSE(s.contains(0));
    CHECK(s.contains(1));
    CHECK(s.contains(120));
    CHECK_FALSE(s.contains(121));
    CHECK(s.contains(601));
    CHECK(s.contains(1800));
    CHECK_FALSE(s.contains(1801));
    CHECK(interval_contains(s, 50));
}

TEST_CASE("unbounded intervals cover everything above the cut") {
    const IntervalSet s = IntervalSet::parse(">1800");
    CHECK_FALSE(s.contains(1800));
    CHECK(s.contains(1801));
    CHECK(s.contains(Interval::kUnbounded));
    CHECK(s.text() == ">1800");
    CHECK(IntervalSet::parse("0+").contains(0));
    CHECK(IntervalSet::parse("0+").text() == "0+");
}

TEST_CASE("interval set text round-trips") {
    const IntervalSet s = IntervalSet::parse("1-120,601-1800,>3600");
    CHECK(s.text() == "1-120,601-1800,>3600");
    CHECK(IntervalSet::parse(s.text()) == s);
}

TEST_CASE("overlapping or inverted intervals are rejected") {
    CHECK_THROWS_AS(IntervalSet({Interval{1, 10}, Interval{10, 20}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalSet({Interval{5, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalSet::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(IntervalSet::parse("abc"), std::invalid_argument);
}

TEST_CASE("generalized episode text round-trips") {
    const GeneralizedEpisode g = parse_generalized("A[1-120] -> B[>1800]");
    REQUIRE(g.size() == 2);
    CHECK(g.nodes[0].label == "A");
    CHECK(g.nodes[0].dwell.contains(60));
    CHECK_FALSE(g.nodes[0].dwell.contains(121));
    CHECK(g.text() == "A[1-120] -> B[>1800]");
    CHECK(parse_generalized(g.text()) == g);
    CHECK_THROWS_AS(parse_generalized("A -> B[1-2]"), std::invalid_argument);
}

TEST_CASE("parse_any_episode picks the flavor by brackets") {
    CHECK(std::holds_alternative<Episode>(parse_any_episode("A -> B")));
    CHECK(std::holds_alternative<GeneralizedEpisode>(parse_any_episode("A[1-2] -> B[3-4]")));
    CHECK(episode_text(parse_any_episode("A -> B")) == "A -> B");
}

TEST_CASE("subepisode is the ordered-subsequence relation") {
    const Episode abc = plain({"A", "B", "C"});
    CHECK(subepisode(plain({"A", "C"}), abc));
    CHECK(subepisode(plain({"A", "B", "C"}), abc));  // reflexive
    CHECK(subepisode(plain({"B"}), abc));
    CHECK_FALSE(subepisode(plain({"C", "A"}), abc));
    CHECK_FALSE(subepisode(plain({"A", "A"}), abc));
    CHECK(subepisode(plain({"A", "A"}), plain({"A", "B", "A"})));
}

TEST_CASE("generalized subepisode needs identical interval sets on matched nodes") {
    const GeneralizedEpisode alpha = parse_generalized("A[1-120] -> B[>1800] -> C[1-120]");
    CHECK(subepisode(parse_generalized("A[1-120] -> C[1-120]"), alpha));
    CHECK_FALSE(subepisode(parse_generalized("A[1-60] -> C[1-120]"), alpha));
    // Mixed flavors never relate.
    CHECK_FALSE(subepisode(AnyEpisode{plain({"A", "C"})}, AnyEpisode{alpha}));
}

TEST_CASE("drop_node removes exactly one node") {
    const Episode abc = plain({"A", "B", "C"});
    CHECK(drop_node(abc, 0) == plain({"B", "C"}));
    CHECK(drop_node(abc, 1) == plain({"A", "C"}));
    CHECK(drop_node(abc, 2) == plain({"A", "B"}));
    CHECK_THROWS_AS(drop_node(abc, 3), std::out_of_range);
    CHECK_THROWS_AS(drop_node(plain({"A"}), 0), std::invalid_argument);
    // Every drop is a subepisode of the original.
    for (std::size_t i = 0; i < abc.size(); ++i) CHECK(subepisode(drop_node(abc, i), abc));
}

TEST_CASE("episodes order lexicographically by node sequence") {
    CHECK(plain({"A", "B"}) < plain({"A", "C"}));
    CHECK(plain({"A"}) < plain({"A", "A"}));
    const AnyEpisode a = plain({"A", "B"});
    const AnyEpisode b = plain({"B"});
    CHECK(a < b);
}
