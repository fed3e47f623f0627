#include <catch2/catch_amalgamated.hpp>

#include "comcore/grid.hpp"

using namespace comcore;

TEST_CASE("cell_center maps cells to cell midpoints in meters") {
    GridSpec g7(7, 7, 10.0);
    CHECK(cell_center(g7, {0, 0}) == std::pair{5.0, 5.0});
    CHECK(cell_center(g7, {6, 6}) == std::pair{65.0, 65.0});

    GridSpec g3(3, 3, 2.0);
    CHECK(cell_center(g3, {1, 1}) == std::pair{3.0, 3.0});

    CHECK_THROWS_MATCHES(cell_center(g7, {7, 0}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::Bounds;
                         }));
}

TEST_CASE("grid construction rejects bad dimensions and blocked cells") {
    CHECK_THROWS_AS(GridSpec(0, 5), Error);
    CHECK_THROWS_AS(GridSpec(5, 5, 0.0), Error);
    CHECK_THROWS_AS(GridSpec(5, 5, 10.0, {Cell{5, 0}}), Error);
    GridSpec ok(5, 5, 10.0, {Cell{2, 2}});
    CHECK(ok.is_blocked({2, 2}));
    CHECK(ok.passable({1, 2}));
}

TEST_CASE("neighbors are forward, left, right with heading carried along") {
    GridSpec g(7, 7);
    const auto n = neighbors(g, {3, 3}, Heading::North);
    REQUIRE(n.size() == 3);
    CHECK(n[0] == std::pair{Cell{3, 4}, Heading::North});
    CHECK(n[1] == std::pair{Cell{2, 3}, Heading::West});
    CHECK(n[2] == std::pair{Cell{4, 3}, Heading::East});
}

TEST_CASE("neighbors clip at the boundary") {
    GridSpec g(7, 7);
    // At the SW corner heading south, forward and left leave the grid.
    const auto n = neighbors(g, {0, 0}, Heading::South);
    REQUIRE(n.size() == 1);
    CHECK(n[0] == std::pair{Cell{1, 0}, Heading::East});
}

TEST_CASE("neighbors skip blocked cells") {
    GridSpec g(7, 7, 10.0, {Cell{3, 4}});
    const auto n = neighbors(g, {3, 3}, Heading::North);
    REQUIRE(n.size() == 2);
    for (const auto& [cell, h] : n) {
        CHECK(cell != Cell{3, 4});
    }
}

TEST_CASE("neighbors never reverse, for every heading and interior cell") {
    GridSpec g(7, 7);
    for (int y = 1; y < 6; ++y) {
        for (int x = 1; x < 6; ++x) {
            for (int hi = 0; hi < 4; ++hi) {
                const Heading h = static_cast<Heading>(hi);
                const Cell fwd = heading_step(h);
                const Cell behind{x - fwd.x, y - fwd.y};
                const auto succ = neighbors(g, {x, y}, h);
                REQUIRE(succ.size() == 3);
                for (const auto& [cell, nh] : succ) {
                    CHECK(cell != behind);
                }
            }
        }
    }
}

TEST_CASE("ring_cells lists the 8 surrounding cells anticlockwise from east") {
    const auto ring = ring_cells({3, 3});
    const std::array<Cell, 8> expected{Cell{4, 3}, Cell{4, 4}, Cell{3, 4},
                                       Cell{2, 4}, Cell{2, 3}, Cell{2, 2},
                                       Cell{3, 2}, Cell{4, 2}};
    CHECK(ring == expected);

    // At the origin the ring may leave the grid; bounds are the caller's job.
    const auto corner = ring_cells({0, 0});
    CHECK(corner[4] == Cell{-1, 0});

    for (const Cell& c : ring) {
        CHECK(chebyshev(c, {3, 3}) == 1);
    }
}

TEST_CASE("ring_count matches the collision-grid counting examples") {
    const Cell v{3, 3};
    CHECK(ring_count(v, {3, 2}, {3, 4}) == 4);  // south to north
    CHECK(ring_count(v, {3, 2}, {4, 3}) == 2);  // south to east
    CHECK(ring_count(v, {4, 3}, {3, 2}) == 6);  // east to south
}

TEST_CASE("ring_count complement identity and zero identity") {
    const Cell v{5, 2};
    const auto ring = ring_cells(v);
    for (const Cell& a : ring) {
        CHECK(ring_count(v, a, a) == 0);
        for (const Cell& b : ring) {
            if (a == b) continue;
            CHECK(ring_count(v, a, b) + ring_count(v, b, a) == 8);
        }
    }
}

TEST_CASE("ring_count rejects cells off the ring") {
    CHECK_THROWS_MATCHES(ring_count({3, 3}, {3, 3}, {3, 4}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::Ring;
                         }));
    CHECK_THROWS_AS(ring_count({3, 3}, {3, 2}, {5, 3}), Error);
}

TEST_CASE("heading rotations are inverse bijections") {
    for (int hi = 0; hi < 4; ++hi) {
        const Heading h = static_cast<Heading>(hi);
        CHECK(rotate_left(rotate_right(h)) == h);
        CHECK(rotate_right(rotate_left(h)) == h);
        CHECK(rotate_right(rotate_right(h)) == rotate_left(rotate_left(h)));
    }
}
