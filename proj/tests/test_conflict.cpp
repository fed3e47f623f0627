#include <catch2/catch_amalgamated.hpp>

#include "comcore/astar.hpp"
#include "comcore/conflict.hpp"
#include "comcore/scenario.hpp"
#include "oracles.hpp"

using namespace comcore;

namespace {

// Straight-line path along one axis, one cell per timestep.
TimedPath line(int id, Cell from, Cell to) {
    TimedPath p;
    p.agent_id = id;
    const int dx = (to.x > from.x) - (to.x < from.x);
    const int dy = (to.y > from.y) - (to.y < from.y);
    Cell c = from;
    p.waypoints.push_back(c);
    while (c != to) {
        c = Cell{c.x + dx, c.y + dy};
        p.waypoints.push_back(c);
    }
    return p;
}

CollisionWindow window(Cell vertex, Cell prev_i, Cell next_i, Cell prev_j,
                       Cell next_j, int t = 3) {
    return CollisionWindow{0, 1, t, AgentWindow{prev_i, vertex, next_i},
                           AgentWindow{prev_j, vertex, next_j}};
}

bool is_kind(const Error& e, ErrorKind k) { return e.kind() == k; }

}  // namespace

TEST_CASE("validate finds a head-on meeting in the middle") {
    Solution s{{line(0, {3, 0}, {3, 6}), line(1, {3, 6}, {3, 0})}};
    const auto found = validate(s);
    REQUIRE(found.has_value());
    const auto& [conflict, w] = *found;
    CHECK(conflict.agent_i == 0);
    CHECK(conflict.agent_j == 1);
    CHECK(conflict.vertex == Cell{3, 3});
    CHECK(conflict.t == 3);
    CHECK(conflict.ctype == ConflictType::HeadOn);
    CHECK(w.wi.prev == Cell{3, 2});
    CHECK(w.wj.prev == Cell{3, 4});
    CHECK(w.wi.next == Cell{3, 4});
    CHECK(w.wj.next == Cell{3, 2});
}

TEST_CASE("validate finds an orthogonal crossing") {
    Solution s{{line(0, {3, 0}, {3, 6}), line(1, {6, 3}, {0, 3})}};
    const auto found = validate(s);
    REQUIRE(found.has_value());
    const auto& [conflict, w] = *found;
    CHECK(conflict.vertex == Cell{3, 3});
    CHECK(conflict.t == 3);
    CHECK(conflict.ctype == ConflictType::Crossing);
    CHECK(w.wi.prev == Cell{3, 2});
    CHECK(w.wj.prev == Cell{4, 3});
}

TEST_CASE("parallel paths have no conflict") {
    Solution s{{line(0, {0, 1}, {6, 1}), line(1, {0, 5}, {6, 5})}};
    CHECK(!validate(s).has_value());
}

TEST_CASE("validate reports the earliest conflict") {
    // Agents 2,3 meet on row 5 at t=2; agents 0,1 meet on row 1 at t=3.
    Solution s{{
        line(0, {0, 1}, {6, 1}),
        line(1, {6, 1}, {0, 1}),
        line(2, {0, 5}, {4, 5}),
        line(3, {4, 5}, {0, 5}),
    }};
    const auto found = validate(s);
    REQUIRE(found.has_value());
    CHECK(found->first.agent_i == 2);
    CHECK(found->first.agent_j == 3);
    CHECK(found->first.t == 2);
}

TEST_CASE("ties at equal time go to the smallest agent pair") {
    // Three agents converge on (3,3) at t=3; the pair (0,1) is recorded.
    Solution s{{
        line(0, {3, 0}, {3, 6}),
        line(1, {6, 3}, {0, 3}),
        line(2, {3, 6}, {3, 0}),
    }};
    const auto found = validate(s);
    REQUIRE(found.has_value());
    CHECK(found->first.agent_i == 0);
    CHECK(found->first.agent_j == 1);
    CHECK(found->first.t == 3);
}

TEST_CASE("an arrived agent no longer occupies its goal cell") {
    Solution s{{line(0, {3, 1}, {3, 3}), line(1, {6, 3}, {0, 3})}};
    // Agent 0 parks on (3,3) at t=2 and disappears; agent 1 passes at t=3.
    CHECK(!validate(s).has_value());
}

TEST_CASE("coincident starts cannot form a collision window") {
    Solution s{{line(0, {2, 2}, {5, 2}), line(1, {2, 2}, {2, 5})}};
    CHECK_THROWS_MATCHES(validate(s), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return is_kind(e, ErrorKind::WindowUnavailable);
                         }));
}

TEST_CASE("a conflict on a path's final step cannot form a window") {
    Solution s{{line(0, {3, 1}, {3, 3}), line(1, {1, 3}, {4, 3})}};
    // Both reach (3,3) at t=2; agent 0 has no t+1 cell there.
    CHECK_THROWS_MATCHES(validate(s), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return is_kind(e, ErrorKind::WindowUnavailable);
                         }));
}

TEST_CASE("classification follows the anticlockwise count") {
    const Cell v{3, 3};
    // south vs north: count 4
    CHECK(classify(window(v, {3, 2}, {3, 4}, {3, 4}, {3, 2})) ==
          ConflictType::HeadOn);
    // south vs east: count 2
    CHECK(classify(window(v, {3, 2}, {3, 4}, {4, 3}, {2, 3})) ==
          ConflictType::Crossing);
    // south vs west: count 6
    CHECK(classify(window(v, {3, 2}, {3, 4}, {2, 3}, {4, 3})) ==
          ConflictType::Crossing);
}

TEST_CASE("all 12 ordered cardinal pairs classify, 4 head-on and 8 crossing") {
    const Cell v{3, 3};
    const Cell cardinals[4] = {{4, 3}, {3, 4}, {2, 3}, {3, 2}};  // E N W S
    int head_on = 0, crossing = 0;
    for (const Cell& pi : cardinals) {
        for (const Cell& pj : cardinals) {
            if (pi == pj) continue;
            const auto w = window(v, pi, Cell{2 * v.x - pi.x, 2 * v.y - pi.y}, pj,
                                  Cell{2 * v.x - pj.x, 2 * v.y - pj.y});
            const int n = ring_count(v, pi, pj);
            const ConflictType type = classify(w);
            if (type == ConflictType::HeadOn) {
                ++head_on;
                CHECK(n == 4);
            } else {
                ++crossing;
                CHECK((n == 2 || n == 6));
            }
            // Swapping the agents maps n to 8-n and keeps the type.
            const auto swapped = window(v, pj, Cell{2 * v.x - pj.x, 2 * v.y - pj.y},
                                        pi, Cell{2 * v.x - pi.x, 2 * v.y - pi.y});
            CHECK(classify(swapped) == type);
        }
    }
    CHECK(head_on == 4);
    CHECK(crossing == 8);
}

TEST_CASE("a diagonal approach cell is unclassifiable") {
    const Cell v{3, 3};
    const auto w = window(v, {2, 2}, {3, 4}, {3, 2}, {3, 4});  // count 1
    try {
        classify(w);
        FAIL("expected UnclassifiableConflict");
    } catch (const UnclassifiableConflict& e) {
        CHECK(e.kind() == ErrorKind::Unclassifiable);
        CHECK(e.window().wi.prev == Cell{2, 2});
    }
}

TEST_CASE("an approach from the vertex itself is unclassifiable") {
    const Cell v{3, 3};
    CHECK_THROWS_AS(classify(window(v, v, {3, 4}, {3, 2}, {3, 4})),
                    UnclassifiableConflict);
}

TEST_CASE("labeling matches the counting table") {
    const Cell v{3, 3};
    // count 2: i gives way
    const auto r2 = label(window(v, {3, 2}, {3, 4}, {4, 3}, {2, 3}));
    CHECK(r2.first == VesselRole::GiveWay);
    CHECK(r2.second == VesselRole::StandOn);
    // count 6: i stands on
    const auto r6 = label(window(v, {3, 2}, {3, 4}, {2, 3}, {4, 3}));
    CHECK(r6.first == VesselRole::StandOn);
    CHECK(r6.second == VesselRole::GiveWay);
}

TEST_CASE("labeling a head-on window is not applicable") {
    const Cell v{3, 3};
    CHECK_THROWS_MATCHES(label(window(v, {3, 2}, {3, 4}, {3, 4}, {3, 2})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return is_kind(e, ErrorKind::RoleNotApplicable);
                         }));
}

TEST_CASE("validate agrees with the occupancy oracle on the first conflict time") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const Scenario s = gen_bench(8, 7, seed);
        const Solution plans = plan_all(s.grid, s.agents);
        const auto oracle = oracles::first_shared_vertex(plans.paths);
        std::optional<std::pair<Conflict, CollisionWindow>> found;
        try {
            found = validate(plans);
        } catch (const Error&) {
            // No window there; the oracle must still see the co-location.
            REQUIRE(oracle.has_value());
            continue;
        }
        CHECK(found.has_value() == oracle.has_value());
        if (found && oracle) {
            CHECK(found->first.t == oracle->t);
        }
    }
}

TEST_CASE("give-way vessel always has the other on its starboard side") {
    const Cell v{3, 3};
    const Cell cardinals[4] = {{4, 3}, {3, 4}, {2, 3}, {3, 2}};
    int checked = 0;
    for (const Cell& pi : cardinals) {
        for (const Cell& pj : cardinals) {
            if (pi == pj) continue;
            const int n = ring_count(v, pi, pj);
            if (n == 4) continue;
            const auto w = window(v, pi, Cell{2 * v.x - pi.x, 2 * v.y - pi.y}, pj,
                                  Cell{2 * v.x - pj.x, 2 * v.y - pj.y});
            const auto roles = label(w);
            // Exactly one vessel gives way.
            CHECK(roles.first != roles.second);
            const Cell give_prev = roles.first == VesselRole::GiveWay ? pi : pj;
            const Cell stand_prev = roles.first == VesselRole::GiveWay ? pj : pi;
            // Right-hand normal of the give-way vessel's approach direction.
            const int dx = v.x - give_prev.x;
            const int dy = v.y - give_prev.y;
            const int rx = dy, ry = -dx;
            CHECK((stand_prev.x - v.x) * rx + (stand_prev.y - v.y) * ry > 0);
            // Swapping the agents swaps the labels.
            const auto swapped =
                label(window(v, pj, Cell{2 * v.x - pj.x, 2 * v.y - pj.y}, pi,
                             Cell{2 * v.x - pi.x, 2 * v.y - pi.y}));
            CHECK(swapped.first == roles.second);
            CHECK(swapped.second == roles.first);
            ++checked;
        }
    }
    CHECK(checked == 8);
}
