#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comcore/conflict.hpp"
#include "comcore/grid.hpp"
#include "comcore/path.hpp"

namespace comcore {

// Replacement waypoints for one agent's collision window. The first cell is
// the agent's t-1 cell and the last its t+1 cell; splicing substitutes the
// window's 3 cells with these.
struct InsertionList {
    int agent_id = 0;
    int splice_start_t = 0;  // path index of the t-1 cell
    std::vector<Cell> cells;

    int timestep_delta() const { return static_cast<int>(cells.size()) - 3; }
};

enum class WindowSide { AgentI, AgentJ };

namespace detail {

inline const AgentWindow& side(const CollisionWindow& w, WindowSide s) {
    return s == WindowSide::AgentI ? w.wi : w.wj;
}

inline int side_id(const CollisionWindow& w, WindowSide s) {
    return s == WindowSide::AgentI ? w.agent_i : w.agent_j;
}

// Walk anticlockwise along the ring from `from_index` appending cells until
// `stop` is appended. Every visited cell must be free.
inline void walk_ring_until(const GridSpec& spec, const Cell& vertex,
                            int from_index, const Cell& stop,
                            std::vector<Cell>& out) {
    const auto ring = ring_cells(vertex);
    int idx = from_index;
    for (int steps = 0; steps < 8; ++steps) {
        idx = (idx + 1) % 8;
        const Cell c = ring[static_cast<size_t>(idx)];
        if (!spec.passable(c)) {
            throw Error(ErrorKind::BoundaryResolution,
                        "maneuver around " + to_string(vertex) +
                            " needs cell " + to_string(c) +
                            ", which is outside the grid or blocked");
        }
        out.push_back(c);
        if (c == stop) return;
    }
    throw Error(ErrorKind::Ring, "ring walk around " + to_string(vertex) +
                                     " never reached " + to_string(stop));
}

}  // namespace detail

// Head-on maneuver for one of the two agents: from its t-1 cell, follow the
// ring anticlockwise until the t+1 cell is reached. Both vessels perform
// this identically, which makes each give way to starboard.
inline InsertionList head_on_insertion(const GridSpec& spec,
                                       const CollisionWindow& window,
                                       WindowSide which) {
    const AgentWindow& w = detail::side(window, which);
    const Cell vertex = w.at;
    const auto start_index = ring_index(vertex, w.prev);
    if (!start_index) {
        throw UnclassifiableConflict(window, "t-1 cell is not adjacent to the vertex");
    }
    InsertionList list;
    list.agent_id = detail::side_id(window, which);
    list.splice_start_t = window.t - 1;
    list.cells.push_back(w.prev);
    detail::walk_ring_until(spec, vertex, *start_index, w.next, list.cells);
    return list;
}

// Crossing maneuvers. The stand-on vessel keeps its course: its list is the
// unmodified window. The give-way vessel follows the ring anticlockwise from
// its t-1 cell until it reaches the stand-on vessel's t-1 cell, then, unless
// already at its own t+1 cell, cuts through the vertex to rejoin its path.
// Returns (stand-on list, give-way list).
inline std::pair<InsertionList, InsertionList> crossing_insertions(
    const GridSpec& spec, const CollisionWindow& window,
    std::pair<VesselRole, VesselRole> roles) {
    const WindowSide stand_side = roles.first == VesselRole::StandOn
                                      ? WindowSide::AgentI
                                      : WindowSide::AgentJ;
    const WindowSide give_side = stand_side == WindowSide::AgentI
                                     ? WindowSide::AgentJ
                                     : WindowSide::AgentI;
    const AgentWindow& ws = detail::side(window, stand_side);
    const AgentWindow& wg = detail::side(window, give_side);
    const Cell vertex = ws.at;

    InsertionList stand;
    stand.agent_id = detail::side_id(window, stand_side);
    stand.splice_start_t = window.t - 1;
    stand.cells = {ws.prev, ws.at, ws.next};

    const auto give_index = ring_index(vertex, wg.prev);
    if (!give_index) {
        throw UnclassifiableConflict(window, "t-1 cell is not adjacent to the vertex");
    }
    InsertionList give;
    give.agent_id = detail::side_id(window, give_side);
    give.splice_start_t = window.t - 1;
    give.cells.push_back(wg.prev);
    detail::walk_ring_until(spec, vertex, *give_index, ws.prev, give.cells);
    if (give.cells.back() != wg.next) {
        give.cells.push_back(vertex);
        give.cells.push_back(wg.next);
    }
    return {std::move(stand), std::move(give)};
}

// Replace the window cells at t-1, t, t+1 with the insertion list. Later
// waypoints shift by the list's length minus 3.
inline TimedPath splice(const TimedPath& path, int t, const InsertionList& list) {
    if (t < 1 || t + 1 >= path.length()) {
        throw Error(ErrorKind::Splice,
                    "splice time " + std::to_string(t) + " has no window in a " +
                        std::to_string(path.length()) + "-waypoint path");
    }
    if (list.cells.size() < 2 || list.cells.front() != path.at(t - 1) ||
        list.cells.back() != path.at(t + 1)) {
        throw Error(ErrorKind::Splice,
                    "insertion list endpoints do not match path cells at t-1/t+1");
    }
    TimedPath out;
    out.agent_id = path.agent_id;
    out.waypoints.reserve(path.waypoints.size() + list.cells.size() - 3);
    out.waypoints.insert(out.waypoints.end(), path.waypoints.begin(),
                         path.waypoints.begin() + (t - 1));
    out.waypoints.insert(out.waypoints.end(), list.cells.begin(),
                         list.cells.end());
    out.waypoints.insert(out.waypoints.end(),
                         path.waypoints.begin() + (t + 2), path.waypoints.end());
    return out;
}

// Everything applied while resolving one conflict, kept for audit and for
// the trajectory output.
struct ResolutionStep {
    Conflict conflict;
    CollisionWindow window;
    std::optional<std::pair<VesselRole, VesselRole>> roles;  // crossings only
    InsertionList list_i;  // agent_i's replacement (identity for a stand-on)
    InsertionList list_j;
};

inline ResolutionStep resolve_step(const GridSpec& spec, const Conflict& conflict,
                                   const CollisionWindow& window) {
    ResolutionStep step;
    step.conflict = conflict;
    step.window = window;
    if (conflict.ctype == ConflictType::HeadOn) {
        step.list_i = head_on_insertion(spec, window, WindowSide::AgentI);
        step.list_j = head_on_insertion(spec, window, WindowSide::AgentJ);
    } else {
        const auto roles = label(window);
        step.roles = roles;
        auto [stand, give] = crossing_insertions(spec, window, roles);
        if (roles.first == VesselRole::StandOn) {
            step.list_i = std::move(stand);
            step.list_j = std::move(give);
        } else {
            step.list_i = std::move(give);
            step.list_j = std::move(stand);
        }
    }
    return step;
}

inline Solution apply_step(const Solution& solution, const ResolutionStep& step) {
    Solution out = solution;
    const int t = step.conflict.t;
    out.path_of(step.conflict.agent_i) =
        splice(solution.path_of(step.conflict.agent_i), t, step.list_i);
    out.path_of(step.conflict.agent_j) =
        splice(solution.path_of(step.conflict.agent_j), t, step.list_j);
    return out;
}

// COLREGs-compliant modification of the two conflicting agents' paths; all
// other paths are untouched.
inline Solution resolve(const GridSpec& spec, const Solution& solution,
                        const Conflict& conflict, const CollisionWindow& window) {
    return apply_step(solution, resolve_step(spec, conflict, window));
}

// One node of the solution list: the solution it stores plus the conflict
// whose resolution produced it (absent for the root). Nodes form a chain;
// a node's parent is the previous entry.
struct SolutionNode {
    Solution solution;
    std::optional<ResolutionStep> resolved;
    int depth = 0;
};

struct Phase2Result {
    std::vector<SolutionNode> chain;

    const SolutionNode& goal() const { return chain.back(); }
    int conflicts_resolved() const { return static_cast<int>(chain.size()) - 1; }
};

// Carries the chain built so far, so callers can see where resolution stalled.
class IterationLimitExceeded : public Error {
public:
    IterationLimitExceeded(int max_iterations, std::vector<SolutionNode> chain)
        : Error(ErrorKind::IterationLimit,
                "phase-2 did not converge within " +
                    std::to_string(max_iterations) + " resolutions"),
          chain_(std::move(chain)) {}

    const std::vector<SolutionNode>& chain() const { return chain_; }

private:
    std::vector<SolutionNode> chain_;
};

// Phase-2: repeatedly find the first conflict and resolve it, growing the
// solution list until its last node is conflict-free.
inline Phase2Result phase2(const GridSpec& spec, const Solution& initial,
                           int max_iterations = 100) {
    if (max_iterations < 1) {
        throw Error(ErrorKind::Scenario, "max_iterations must be positive");
    }
    Phase2Result result;
    result.chain.push_back(SolutionNode{initial, std::nullopt, 0});
    while (true) {
        const SolutionNode& node = result.chain.back();
        const auto found = validate(node.solution);
        if (!found) {
            return result;
        }
        if (result.conflicts_resolved() >= max_iterations) {
            throw IterationLimitExceeded(max_iterations, std::move(result.chain));
        }
        const auto& [conflict, window] = *found;
        ResolutionStep step = resolve_step(spec, conflict, window);
        Solution next = apply_step(node.solution, step);
        result.chain.push_back(SolutionNode{std::move(next), std::move(step),
                                            node.depth + 1});
    }
}

}  // namespace comcore
