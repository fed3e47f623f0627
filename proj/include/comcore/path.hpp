#pragma once

#include <string>
#include <vector>

#include "comcore/errors.hpp"
#include "comcore/grid.hpp"

namespace comcore {

struct AgentSpec {
    int id = 0;
    Cell start;
    Heading start_heading = Heading::East;
    Cell goal;
};

// Default heading when a scenario omits it: the cardinal direction with the
// largest displacement toward the goal, ties preferring East, then North.
inline Heading infer_heading(const Cell& start, const Cell& goal) {
    const int dx = goal.x - start.x;
    const int dy = goal.y - start.y;
    const Heading order[4] = {Heading::East, Heading::North, Heading::West,
                              Heading::South};
    const int disp[4] = {dx, dy, -dx, -dy};
    int best = 0;
    for (int i = 1; i < 4; ++i) {
        if (disp[i] > disp[best]) best = i;
    }
    return order[best];
}

// One agent's timed path: waypoints[t] is the cell occupied at timestep t.
// The agent leaves the grid after its final waypoint time.
struct TimedPath {
    int agent_id = 0;
    std::vector<Cell> waypoints;

    int length() const { return static_cast<int>(waypoints.size()); }
    int moves() const { return length() - 1; }
    int last_time() const { return length() - 1; }

    bool occupies_at(int t) const { return t >= 0 && t < length(); }
    const Cell& at(int t) const { return waypoints[static_cast<size_t>(t)]; }

    friend bool operator==(const TimedPath& a, const TimedPath& b) {
        return a.agent_id == b.agent_id && a.waypoints == b.waypoints;
    }
};

// One path per agent, indexed by agent id.
struct Solution {
    std::vector<TimedPath> paths;

    int agent_count() const { return static_cast<int>(paths.size()); }
    const TimedPath& path_of(int id) const {
        return paths[static_cast<size_t>(id)];
    }
    TimedPath& path_of(int id) { return paths[static_cast<size_t>(id)]; }

    int total_moves() const {
        int sum = 0;
        for (const auto& p : paths) sum += p.moves();
        return sum;
    }

    friend bool operator==(const Solution& a, const Solution& b) {
        return a.paths == b.paths;
    }
};

// Consecutive waypoints must stay within one cell of each other. Zero-length
// steps (holds) are only produced by the simulator's swap mitigation.
inline bool path_steps_valid(const TimedPath& p, bool allow_hold = false) {
    for (size_t i = 1; i < p.waypoints.size(); ++i) {
        const int d = chebyshev(p.waypoints[i - 1], p.waypoints[i]);
        if (d > 1) return false;
        if (d == 0 && !allow_hold) return false;
    }
    return true;
}

}  // namespace comcore
