#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "comcore/grid.hpp"
#include "comcore/path.hpp"

namespace comcore {

enum class ConflictType { HeadOn, Crossing };

inline const char* to_string(ConflictType t) {
    return t == ConflictType::HeadOn ? "head_on" : "crossing";
}

enum class VesselRole { StandOn, GiveWay };

inline const char* to_string(VesselRole r) {
    return r == VesselRole::StandOn ? "stand_on" : "give_way";
}

// Two agents occupying the same vertex at the same timestep.
struct Conflict {
    int agent_i = 0;  // lower id
    int agent_j = 0;
    Cell vertex;
    int t = 0;
    ConflictType ctype = ConflictType::HeadOn;
};

// One agent's cells at t-1, t, t+1 around a conflict.
struct AgentWindow {
    Cell prev;
    Cell at;
    Cell next;
};

// The positions of both agents one step before and after the collision.
// The collision grid is the 3x3 neighborhood centered on vertex().
struct CollisionWindow {
    int agent_i = 0;
    int agent_j = 0;
    int t = 0;
    AgentWindow wi;
    AgentWindow wj;

    Cell vertex() const { return wi.at; }
};

inline std::string describe(const CollisionWindow& w) {
    return "vertex " + to_string(w.vertex()) + " t=" + std::to_string(w.t) +
           " agents (" + std::to_string(w.agent_i) + "," +
           std::to_string(w.agent_j) + ") prev " + to_string(w.wi.prev) + "/" +
           to_string(w.wj.prev);
}

// Carries the offending window so callers can report the exact geometry.
class UnclassifiableConflict : public Error {
public:
    explicit UnclassifiableConflict(CollisionWindow window, std::string detail)
        : Error(ErrorKind::Unclassifiable,
                "unclassifiable conflict: " + detail + " [" + describe(window) + "]"),
          window_(window) {}

    const CollisionWindow& window() const { return window_; }

private:
    CollisionWindow window_;
};

// Conflict type from the anticlockwise cell count between the two agents'
// t-1 positions in the collision grid: 4 means reciprocal courses (head-on),
// 2 or 6 orthogonal courses (crossing).
inline ConflictType classify(const CollisionWindow& window) {
    const Cell v = window.vertex();
    if (window.wj.at != v) {
        throw UnclassifiableConflict(window, "window centers disagree");
    }
    if (!ring_index(v, window.wi.prev) || !ring_index(v, window.wj.prev)) {
        throw UnclassifiableConflict(window, "a t-1 cell is not adjacent to the vertex");
    }
    const int n = ring_count(v, window.wi.prev, window.wj.prev);
    switch (n) {
        case 4: return ConflictType::HeadOn;
        case 2:
        case 6: return ConflictType::Crossing;
        default:
            throw UnclassifiableConflict(window,
                                         "count " + std::to_string(n) +
                                             " is not 2, 4 or 6");
    }
}

// Stand-on / give-way labels for a crossing. Counting anticlockwise from
// agent i's t-1 cell to agent j's: 6 puts j on i's port (i stands on),
// 2 puts j on i's starboard (i gives way).
inline std::pair<VesselRole, VesselRole> label(const CollisionWindow& window) {
    const Cell v = window.vertex();
    if (!ring_index(v, window.wi.prev) || !ring_index(v, window.wj.prev)) {
        throw Error(ErrorKind::RoleNotApplicable,
                    "labeling needs ring-adjacent t-1 cells [" + describe(window) + "]");
    }
    const int n = ring_count(v, window.wi.prev, window.wj.prev);
    if (n == 6) return {VesselRole::StandOn, VesselRole::GiveWay};
    if (n == 2) return {VesselRole::GiveWay, VesselRole::StandOn};
    throw Error(ErrorKind::RoleNotApplicable,
                "labeling applies to crossings only (count " + std::to_string(n) +
                    ") [" + describe(window) + "]");
}

// Earliest conflict in the solution, or nullopt when the paths are free of
// them. Paths are simulated in lockstep; an agent stops occupying its cell
// after its final waypoint time. Ties at equal t go to the smallest
// (agent_i, agent_j) pair, and only the first conflict is reported.
inline std::optional<std::pair<Conflict, CollisionWindow>> validate(
    const Solution& solution) {
    const int k = solution.agent_count();
    int horizon = 0;
    for (const TimedPath& p : solution.paths) {
        horizon = std::max(horizon, p.length());
    }
    for (int t = 0; t < horizon; ++t) {
        for (int i = 0; i < k; ++i) {
            const TimedPath& pi = solution.paths[static_cast<size_t>(i)];
            if (!pi.occupies_at(t)) continue;
            for (int j = i + 1; j < k; ++j) {
                const TimedPath& pj = solution.paths[static_cast<size_t>(j)];
                if (!pj.occupies_at(t)) continue;
                if (pi.at(t) != pj.at(t)) continue;

                const Cell vertex = pi.at(t);
                if (t == 0) {
                    throw Error(ErrorKind::WindowUnavailable,
                                "agents " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide at t=0 on " +
                                    to_string(vertex));
                }
                if (!pi.occupies_at(t + 1) || !pj.occupies_at(t + 1)) {
                    throw Error(ErrorKind::WindowUnavailable,
                                "conflict at " + to_string(vertex) + " t=" +
                                    std::to_string(t) + " falls on a path's final "
                                    "step; no collision window exists");
                }
                CollisionWindow window{
                    i, j, t,
                    AgentWindow{pi.at(t - 1), vertex, pi.at(t + 1)},
                    AgentWindow{pj.at(t - 1), vertex, pj.at(t + 1)},
                };
                const ConflictType ctype = classify(window);
                return std::make_pair(Conflict{i, j, vertex, t, ctype}, window);
            }
        }
    }
    return std::nullopt;
}

}  // namespace comcore
