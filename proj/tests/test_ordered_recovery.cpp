#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <colrec/errors.hpp>
#include <colrec/ordered_recovery.hpp>
#include <colrec/simulate.hpp>

#include "support/oracles.hpp"

using namespace colrec;

namespace {

OrderedHistory history(int n, std::initializer_list<std::pair<int, int>> pairs) {
    OrderedHistory h;
    h.n = n;
    double t = 0.1;
    for (auto [u, v] : pairs) {
        h.events.push_back({u, v, t});
        t += 0.8 / (pairs.size() + 1);
    }
    return h;
}

}  // namespace

TEST_CASE("end position of a single collision") {
    ComponentOrdering result = recover_end_position(history(2, {{0, 1}}));
    REQUIRE(result.components.size() == 1);
    CHECK(result.components[0] == Ordering{0, 1});
}

TEST_CASE("end position of two chained collisions matches the replay oracle") {
    OrderedHistory h = history(3, {{0, 1}, {1, 2}});
    auto oracle_ends = testsupport::brute_force_end_positions(h);
    REQUIRE(oracle_ends.size() == 1);
    CHECK(*oracle_ends.begin() == Ordering{0, 2, 1});

    ComponentOrdering result = recover_end_position(h);
    REQUIRE(result.components.size() == 1);
    CHECK(result.components[0] == Ordering{0, 2, 1});
}

TEST_CASE("unrealizable history is rejected") {
    OrderedHistory h = history(3, {{0, 1}, {1, 2}, {0, 1}});
    CHECK(testsupport::brute_force_end_positions(h).empty());
    CHECK_THROWS_AS(recover_end_position(h), InvalidHistory);
}

TEST_CASE("disconnected history yields per-component orderings") {
    OrderedHistory h = history(5, {{0, 1}, {3, 4}, {0, 1}});
    ComponentOrdering result = recover_end_position(h);
    REQUIRE(result.components.size() == 3);
    CHECK(result.components[0] == Ordering{0, 1});
    CHECK(result.components[1] == Ordering{2});
    CHECK(result.components[2] == Ordering{3, 4});
}

TEST_CASE("recover_timeline on the documented examples") {
    OrderingTimeline two = recover_timeline(history(2, {{0, 1}}));
    CHECK(two == OrderingTimeline{{1, 0}, {0, 1}});

    OrderingTimeline three = recover_timeline(history(3, {{0, 1}, {1, 2}}));
    CHECK(three == OrderingTimeline{{1, 0, 2}, {0, 1, 2}, {0, 2, 1}});
}

TEST_CASE("recover_timeline requires connectivity") {
    CHECK_THROWS_AS(recover_timeline(history(4, {{0, 1}})), NotConnected);
    CHECK_THROWS_AS(recover_timeline(history(2, {})), NotConnected);
    // A single object with no events is trivially connected.
    OrderingTimeline single = recover_timeline(history(1, {}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Ordering{0});
}

TEST_CASE("recover_timeline equals the unique replay timeline") {
    // Hand-written realizable chain.
    OrderedHistory triangle = history(3, {{0, 1}, {1, 2}, {0, 2}});
    auto oracle = testsupport::brute_force_timelines(triangle);
    REQUIRE(oracle.size() == 1);
    CHECK(recover_timeline(triangle) == *oracle.begin());

    // Simulated histories are realizable by construction.
    int compared = 0;
    for (std::uint64_t seed = 1000; compared < 15 && seed < 1200; ++seed) {
        TrajectorySet ts = generate_trajectories(2 + seed % 5, 2 + seed % 3, seed);
        OrderedHistory h = extract_history(ts);
        if (!is_connected(underlying_graph(h)) || h.events.size() > 9) continue;
        ++compared;
        auto timelines = testsupport::brute_force_timelines(h);
        REQUIRE(timelines.size() == 1);
        CHECK(recover_timeline(h) == *timelines.begin());
    }
    CHECK(compared == 15);
}

TEST_CASE("histories with a blocked merge endpoint are rejected") {
    // After (2,3),(1,2) object 1 sits between 2 and 3, so (0,1) cannot occur.
    OrderedHistory blocked = history(4, {{2, 3}, {1, 2}, {0, 1}});
    CHECK(testsupport::brute_force_end_positions(blocked).empty());
    CHECK_THROWS_AS(recover_end_position(blocked), InvalidHistory);
}

TEST_CASE("timeline undoes each collision by one adjacent transposition") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        TrajectorySet ts = generate_trajectories(6, 3, seed);
        OrderedHistory h = extract_history(ts);
        if (!is_connected(underlying_graph(h))) continue;
        OrderingTimeline timeline = recover_timeline(h);
        CHECK(timeline_matches_history(h, timeline));
    }
}

TEST_CASE("round trip against the simulator oracle") {
    int connected_seen = 0;
    for (std::uint64_t seed = 0; connected_seen < 50 && seed < 500; ++seed) {
        TrajectorySet ts = generate_trajectories(2 + seed % 9, 2 + seed % 4, seed);
        OrderedHistory h = extract_history(ts);
        if (!is_connected(underlying_graph(h))) continue;
        ++connected_seen;
        OrderingTimeline expected = canonicalize_timeline(ordering_timeline_oracle(ts));
        CHECK(recover_timeline(h) == expected);
    }
    CHECK(connected_seen == 50);
}

TEST_CASE("swap_transform leaves a lone event unchanged") {
    OrderedHistory h = history(2, {{0, 1}});
    auto [transformed, record] = swap_transform(h);
    REQUIRE(record.swaps.size() == 1);
    CHECK(record.swaps[0] == std::pair<int, std::pair<int, int>>{0, {0, 1}});
    CHECK(transformed.events[0].u == 0);
    CHECK(transformed.events[0].v == 1);
}

TEST_CASE("swap_transform relabels later events") {
    OrderedHistory h = history(3, {{0, 1}, {0, 2}});
    auto [transformed, record] = swap_transform(h);
    CHECK(transformed.events[0].u == 0);
    CHECK(transformed.events[0].v == 1);
    CHECK(transformed.events[1].u == 1);
    CHECK(transformed.events[1].v == 2);
}

TEST_CASE("swap_transform preserves times and counts; connected inputs become paths") {
    for (std::uint64_t seed = 40; seed < 80; ++seed) {
        TrajectorySet ts = generate_trajectories(5 + seed % 5, 3, seed);
        OrderedHistory h = extract_history(ts);
        auto [transformed, record] = swap_transform(h);
        REQUIRE(transformed.events.size() == h.events.size());
        REQUIRE(record.swaps.size() == h.events.size());
        for (std::size_t i = 0; i < h.events.size(); ++i)
            CHECK(transformed.events[i].time == h.events[i].time);
        if (!is_connected(underlying_graph(h))) continue;
        CollisionGraph path = underlying_graph(transformed);
        CHECK(path.edge_count() == static_cast<std::size_t>(h.n) - 1);
        auto adj = adjacency_lists(path);
        int endpoints = 0;
        for (int v = 0; v < h.n; ++v) {
            CHECK(adj[v].size() <= 2);
            if (adj[v].size() == 1) ++endpoints;
        }
        CHECK(endpoints == 2);
        CHECK(is_connected(path));
    }
}

TEST_CASE("the two timeline constructions agree exactly") {
    OrderedHistory chain = history(3, {{0, 1}, {1, 2}});
    CHECK(recover_timeline_by_swapping(chain) == recover_timeline(chain));

    OrderedHistory single = history(2, {{0, 1}});
    CHECK(recover_timeline_by_swapping(single) == recover_timeline(single));

    int compared = 0;
    for (std::uint64_t seed = 500; compared < 60 && seed < 900; ++seed) {
        TrajectorySet ts = generate_trajectories(2 + seed % 10, 2 + seed % 4, seed);
        OrderedHistory h = extract_history(ts);
        if (!is_connected(underlying_graph(h))) continue;
        ++compared;
        CHECK(recover_timeline_by_swapping(h) == recover_timeline(h));
    }
    CHECK(compared == 60);
}

TEST_CASE("recover_timeline_by_swapping propagates failures") {
    CHECK_THROWS_AS(recover_timeline_by_swapping(history(4, {{0, 1}})), NotConnected);
    CHECK_THROWS_AS(recover_timeline_by_swapping(history(3, {{0, 1}, {1, 2}, {0, 1}})),
                    InvalidHistory);
}

TEST_CASE("repeated collisions between one pair are fine") {
    OrderedHistory h = history(2, {{0, 1}, {0, 1}, {0, 1}});
    OrderingTimeline timeline = recover_timeline(h);
    REQUIRE(timeline.size() == 4);
    CHECK(timeline_matches_history(h, timeline));
    CHECK(recover_timeline_by_swapping(h) == timeline);
}
