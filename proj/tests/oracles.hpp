#pragma once

// Test-only oracles. These deliberately re-derive results from first
// principles instead of calling the code paths under test: breadth-first
// search for optimal move counts, and a per-timestep occupancy table for
// collision freedom.

#include <deque>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "comcore/grid.hpp"
#include "comcore/path.hpp"

namespace oracles {

using comcore::Cell;
using comcore::GridSpec;
using comcore::Heading;
using comcore::Solution;
using comcore::TimedPath;

// Optimal move count over (cell, heading) states, or nullopt if the goal is
// unreachable. Moves are forward / turn-left-and-advance /
// turn-right-and-advance, mirroring the motion model by direct enumeration.
inline std::optional<int> bfs_min_moves(const GridSpec& spec, const Cell& start,
                                        Heading heading, const Cell& goal) {
    if (!spec.passable(start) || !spec.passable(goal)) return std::nullopt;
    if (start == goal) return 0;

    const auto index = [&](const Cell& c, Heading h) {
        return (c.y * spec.cols() + c.x) * 4 + static_cast<int>(h);
    };
    std::vector<int> dist(static_cast<size_t>(spec.cell_count() * 4), -1);
    std::deque<std::pair<Cell, Heading>> queue;
    dist[static_cast<size_t>(index(start, heading))] = 0;
    queue.emplace_back(start, heading);

    static constexpr int dx[4] = {0, 1, 0, -1};  // N E S W
    static constexpr int dy[4] = {1, 0, -1, 0};

    while (!queue.empty()) {
        const auto [cell, h] = queue.front();
        queue.pop_front();
        const int d = dist[static_cast<size_t>(index(cell, h))];
        const int hi = static_cast<int>(h);
        const int turns[3] = {hi, (hi + 3) % 4, (hi + 1) % 4};
        for (int nh : turns) {
            const Cell next{cell.x + dx[nh], cell.y + dy[nh]};
            if (!spec.passable(next)) continue;
            const int ni = index(next, static_cast<Heading>(nh));
            if (dist[static_cast<size_t>(ni)] != -1) continue;
            dist[static_cast<size_t>(ni)] = d + 1;
            if (next == goal) return d + 1;
            queue.emplace_back(next, static_cast<Heading>(nh));
        }
    }
    return std::nullopt;
}

struct SharedVertex {
    int t;
    Cell cell;
    int agent_i;
    int agent_j;
};

// First time two agents stand on the same cell, via an occupancy table per
// timestep. Agents leave the table after their last waypoint.
inline std::optional<SharedVertex> first_shared_vertex(
    const std::vector<TimedPath>& paths) {
    size_t horizon = 0;
    for (const auto& p : paths) horizon = std::max(horizon, p.waypoints.size());
    for (size_t t = 0; t < horizon; ++t) {
        std::map<Cell, int> occupied;
        for (const auto& p : paths) {
            if (t >= p.waypoints.size()) continue;
            const Cell c = p.waypoints[t];
            const auto [it, fresh] = occupied.emplace(c, p.agent_id);
            if (!fresh) {
                return SharedVertex{static_cast<int>(t), c, it->second, p.agent_id};
            }
        }
    }
    return std::nullopt;
}

inline bool conflict_free(const Solution& solution) {
    return !first_shared_vertex(solution.paths).has_value();
}

}  // namespace oracles
