#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "comcore/grid.hpp"
#include "comcore/path.hpp"

namespace comcore {

namespace detail {

// Search state index: (cell, heading) packed into one int.
inline int state_index(const GridSpec& spec, const Cell& c, Heading h) {
    return (c.y * spec.cols() + c.x) * 4 + static_cast<int>(h);
}

struct AstarEntry {
    int f;
    int h;
    std::uint64_t seq;  // global insertion order; breaks remaining ties
    int state;

    // Min-heap priority: smaller f, then smaller h, then earlier insertion.
    // Successors are pushed in forward/left/right order, so insertion order
    // encodes the fixed successor order as well.
    friend bool operator>(const AstarEntry& a, const AstarEntry& b) {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        return a.seq > b.seq;
    }
};

}  // namespace detail

// Shortest timed path for one agent on the heading-constrained grid.
// Unit cost per move (turns are free), Manhattan-distance heuristic, total
// deterministic ordering. Any heading is accepting at the goal cell.
inline TimedPath astar(const GridSpec& spec, const AgentSpec& agent) {
    if (!spec.passable(agent.start)) {
        throw Error(ErrorKind::Bounds, "agent " + std::to_string(agent.id) +
                                           " start " + to_string(agent.start) +
                                           " not a free cell");
    }
    if (!spec.passable(agent.goal)) {
        throw Error(ErrorKind::Bounds, "agent " + std::to_string(agent.id) +
                                           " goal " + to_string(agent.goal) +
                                           " not a free cell");
    }
    if (agent.start == agent.goal) {
        return TimedPath{agent.id, {agent.start}};
    }

    const int state_count = spec.cell_count() * 4;
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> g(static_cast<size_t>(state_count), kInf);
    std::vector<int> parent(static_cast<size_t>(state_count), -1);
    std::vector<bool> closed(static_cast<size_t>(state_count), false);

    std::priority_queue<detail::AstarEntry, std::vector<detail::AstarEntry>,
                        std::greater<detail::AstarEntry>>
        open;
    std::uint64_t seq = 0;

    const int start_state =
        detail::state_index(spec, agent.start, agent.start_heading);
    g[static_cast<size_t>(start_state)] = 0;
    open.push({manhattan(agent.start, agent.goal),
               manhattan(agent.start, agent.goal), seq++, start_state});

    while (!open.empty()) {
        const detail::AstarEntry top = open.top();
        open.pop();
        if (closed[static_cast<size_t>(top.state)]) continue;
        closed[static_cast<size_t>(top.state)] = true;

        const int cell_index = top.state / 4;
        const Cell cell{cell_index % spec.cols(), cell_index / spec.cols()};
        const Heading heading = static_cast<Heading>(top.state % 4);

        if (cell == agent.goal) {
            std::vector<Cell> cells;
            for (int s = top.state; s != -1; s = parent[static_cast<size_t>(s)]) {
                const int ci = s / 4;
                cells.push_back(Cell{ci % spec.cols(), ci / spec.cols()});
            }
            std::reverse(cells.begin(), cells.end());
            return TimedPath{agent.id, std::move(cells)};
        }

        const int gc = g[static_cast<size_t>(top.state)];
        for (const auto& [next, nh] : neighbors(spec, cell, heading)) {
            const int ns = detail::state_index(spec, next, nh);
            if (closed[static_cast<size_t>(ns)]) continue;
            const int ng = gc + 1;
            if (ng < g[static_cast<size_t>(ns)]) {
                g[static_cast<size_t>(ns)] = ng;
                parent[static_cast<size_t>(ns)] = top.state;
                open.push({ng + manhattan(next, agent.goal),
                           manhattan(next, agent.goal), seq++, ns});
            }
        }
    }

    throw Error(ErrorKind::Unreachable,
                "agent " + std::to_string(agent.id) + ": no path from " +
                    to_string(agent.start) + " to " + to_string(agent.goal));
}

// Phase-1: independent shortest paths, one per agent, ordered by agent id.
inline Solution plan_all(const GridSpec& spec,
                         const std::vector<AgentSpec>& agents) {
    for (size_t i = 0; i < agents.size(); ++i) {
        if (agents[i].id != static_cast<int>(i)) {
            throw Error(ErrorKind::Scenario,
                        "agent ids must be dense and ordered from 0");
        }
    }
    Solution out;
    out.paths.reserve(agents.size());
    for (const AgentSpec& a : agents) {
        out.paths.push_back(astar(spec, a));
    }
    return out;
}

}  // namespace comcore
