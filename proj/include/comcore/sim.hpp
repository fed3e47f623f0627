#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comcore/astar.hpp"
#include "comcore/conflict.hpp"
#include "comcore/grid.hpp"
#include "comcore/path.hpp"
#include "comcore/resolver.hpp"

namespace comcore {

// How the simulator treats edge swaps (two agents exchanging adjacent cells
// in one step). Swaps are not vertex conflicts and the planner does not
// resolve them; they are surfaced here instead.
//   Ignore       leave them out of safety reports
//   Flag         report them, do not alter paths (default)
//   DelayLowerId insert a one-step hold for the lower-id agent; an extension
//                beyond the planner, and an imperfect one: a reciprocal swap
//                becomes a vertex conflict whose window has no valid t-1
//                cell, which surfaces as an unclassifiable conflict.
enum class SwapPolicy { Ignore, Flag, DelayLowerId };

inline const char* to_string(SwapPolicy p) {
    switch (p) {
        case SwapPolicy::Ignore: return "ignore";
        case SwapPolicy::Flag: return "flag";
        case SwapPolicy::DelayLowerId: return "delay";
    }
    return "?";
}

inline std::optional<SwapPolicy> parse_swap_policy(const std::string& s) {
    if (s == "ignore") return SwapPolicy::Ignore;
    if (s == "flag") return SwapPolicy::Flag;
    if (s == "delay") return SwapPolicy::DelayLowerId;
    return std::nullopt;
}

struct SimConfig {
    int trigger_distance_cells = 3;
    SwapPolicy swap_policy = SwapPolicy::Flag;
    int max_iterations = 100;
};

struct TriggerEvent {
    int t = 0;
    int agent_i = 0;
    int agent_j = 0;
};

struct HoldEvent {
    int t = 0;
    int agent_id = 0;
};

// A resolution as applied during a run, with times in the executed (global)
// timeline. For offline planning the global timeline is the plan itself.
struct AppliedResolution {
    ResolutionStep step;  // conflict.t and splice_start_t are global times
    int trigger_t = 0;    // timestep whose trigger invoked the planner
};

enum class AgentStatus { Arrived, Aborted };

struct SimTrace {
    SimConfig config;
    std::vector<TimedPath> phase1;    // independent plans before any trigger
    std::vector<TimedPath> executed;  // cells actually traversed
    std::vector<TriggerEvent> triggers;
    std::vector<HoldEvent> holds;
    std::vector<AppliedResolution> resolutions;
    std::vector<AgentStatus> status;
};

// Wraps a planner error raised mid-run; carries the partial trace with
// unfinished agents marked Aborted.
class SimError : public Error {
public:
    SimError(const Error& cause, int timestep, SimTrace partial)
        : Error(cause.kind(), std::string(cause.what()) + " (simulation t=" +
                                  std::to_string(timestep) + ")"),
          timestep_(timestep), partial_(std::move(partial)) {}

    int timestep() const { return timestep_; }
    const SimTrace& partial_trace() const { return partial_; }

private:
    int timestep_;
    SimTrace partial_;
};

namespace detail {

// First shared vertex strictly ahead of t between two paths, if any.
inline bool suffix_pair_conflict(const TimedPath& a, const TimedPath& b, int t) {
    const int end = std::min(a.length(), b.length());
    for (int u = t + 1; u < end; ++u) {
        if (a.at(u) == b.at(u)) return true;
    }
    return false;
}

}  // namespace detail

// Lockstep execution. All agents start on their phase-1 paths; whenever two
// in-transit agents come within trigger_distance_cells (Chebyshev) and their
// remaining paths share a future vertex, phase-2 runs on every in-transit
// agent's remaining path and the resolved suffixes replace the remainder.
inline SimTrace run_sim(const GridSpec& spec, const std::vector<AgentSpec>& agents,
                        const SimConfig& config) {
    if (config.trigger_distance_cells < 1) {
        throw Error(ErrorKind::Scenario, "trigger_distance_cells must be >= 1");
    }
    SimTrace trace;
    trace.config = config;
    trace.phase1 = plan_all(spec, agents).paths;
    trace.executed = trace.phase1;

    const int k = static_cast<int>(agents.size());
    auto in_transit = [&](int id, int t) {
        return trace.executed[static_cast<size_t>(id)].occupies_at(t);
    };

    for (int t = 0;; ++t) {
        bool any = false;
        for (int i = 0; i < k; ++i) {
            if (in_transit(i, t)) { any = true; break; }
        }
        if (!any) break;

        if (config.swap_policy == SwapPolicy::DelayLowerId) {
            // Insert holds until no imminent swap remains at this step.
            for (int round = 0; round < k; ++round) {
                bool inserted = false;
                for (int i = 0; i < k && !inserted; ++i) {
                    for (int j = i + 1; j < k && !inserted; ++j) {
                        if (!in_transit(i, t + 1) || !in_transit(j, t + 1)) continue;
                        auto& pi = trace.executed[static_cast<size_t>(i)];
                        auto& pj = trace.executed[static_cast<size_t>(j)];
                        if (pi.at(t) == pj.at(t)) continue;
                        if (pi.at(t) == pj.at(t + 1) && pi.at(t + 1) == pj.at(t)) {
                            pi.waypoints.insert(pi.waypoints.begin() + (t + 1),
                                                pi.at(t));
                            trace.holds.push_back(HoldEvent{t, i});
                            inserted = true;
                        }
                    }
                }
                if (!inserted) break;
            }
        }

        for (int i = 0; i < k; ++i) {
            if (!in_transit(i, t)) continue;
            for (int j = i + 1; j < k; ++j) {
                if (!in_transit(j, t)) continue;
                const auto& pi = trace.executed[static_cast<size_t>(i)];
                const auto& pj = trace.executed[static_cast<size_t>(j)];
                if (chebyshev(pi.at(t), pj.at(t)) > config.trigger_distance_cells) {
                    continue;
                }
                if (!detail::suffix_pair_conflict(pi, pj, t)) continue;

                trace.triggers.push_back(TriggerEvent{t, i, j});

                // Joint suffix over all in-transit agents, re-based to local
                // time 0 and dense local ids.
                std::vector<int> local_to_global;
                Solution suffix;
                for (int a = 0; a < k; ++a) {
                    if (!in_transit(a, t)) continue;
                    const auto& pa = trace.executed[static_cast<size_t>(a)];
                    TimedPath sp;
                    sp.agent_id = static_cast<int>(local_to_global.size());
                    sp.waypoints.assign(pa.waypoints.begin() + t,
                                        pa.waypoints.end());
                    suffix.paths.push_back(std::move(sp));
                    local_to_global.push_back(a);
                }

                Phase2Result resolved;
                try {
                    resolved = phase2(spec, suffix, config.max_iterations);
                } catch (const Error& e) {
                    for (int a = 0; a < k; ++a) {
                        trace.status.push_back(in_transit(a, t)
                                                   ? AgentStatus::Aborted
                                                   : AgentStatus::Arrived);
                    }
                    throw SimError(e, t, std::move(trace));
                }

                for (size_t local = 0; local < local_to_global.size(); ++local) {
                    const int a = local_to_global[local];
                    auto& pa = trace.executed[static_cast<size_t>(a)];
                    const auto& spath = resolved.goal().solution.paths[local];
                    pa.waypoints.resize(static_cast<size_t>(t));
                    pa.waypoints.insert(pa.waypoints.end(),
                                        spath.waypoints.begin(),
                                        spath.waypoints.end());
                }
                for (size_t n = 1; n < resolved.chain.size(); ++n) {
                    AppliedResolution applied;
                    applied.step = *resolved.chain[n].resolved;
                    applied.trigger_t = t;
                    applied.step.conflict.t += t;
                    applied.step.window.t += t;
                    applied.step.list_i.splice_start_t += t;
                    applied.step.list_j.splice_start_t += t;
                    applied.step.conflict.agent_i =
                        local_to_global[static_cast<size_t>(
                            applied.step.conflict.agent_i)];
                    applied.step.conflict.agent_j =
                        local_to_global[static_cast<size_t>(
                            applied.step.conflict.agent_j)];
                    applied.step.window.agent_i = applied.step.conflict.agent_i;
                    applied.step.window.agent_j = applied.step.conflict.agent_j;
                    applied.step.list_i.agent_id = applied.step.conflict.agent_i;
                    applied.step.list_j.agent_id = applied.step.conflict.agent_j;
                    trace.resolutions.push_back(std::move(applied));
                }
            }
        }
    }

    trace.status.assign(static_cast<size_t>(k), AgentStatus::Arrived);
    return trace;
}

struct VertexViolation {
    int t = 0;
    Cell cell;
    int agent_i = 0;
    int agent_j = 0;
};

struct SwapViolation {
    int t = 0;      // swap happens between t and t+1
    Cell cell_i;    // agent_i's cell at t (agent_j's at t+1)
    Cell cell_j;
    int agent_i = 0;
    int agent_j = 0;
};

struct ComplianceFinding {
    int resolution_index = 0;
    bool pass = false;
    std::string detail;
};

struct SafetyReport {
    std::vector<VertexViolation> vertex_violations;
    std::vector<SwapViolation> swap_violations;
    std::vector<ComplianceFinding> compliance_findings;

    bool compliant() const {
        for (const auto& f : compliance_findings) {
            if (!f.pass) return false;
        }
        return true;
    }
    bool clean() const {
        return vertex_violations.empty() && swap_violations.empty() && compliant();
    }
};

namespace detail {

// dot(cell - vertex, starboard normal of the approach heading) > 0.
inline bool strictly_starboard(const Cell& vertex, Heading approach, const Cell& c) {
    const Cell d = heading_step(approach);
    const int rx = d.y;   // starboard normal: rotate the heading right
    const int ry = -d.x;
    return (c.x - vertex.x) * rx + (c.y - vertex.y) * ry > 0;
}

// Checks a recorded list against the shape the head-on maneuver must have:
// window endpoints, an anticlockwise ring walk, and a first deviation to
// starboard. Pure geometry; no resolver code involved.
inline std::optional<std::string> check_head_on_list(
    const Cell& vertex, const AgentWindow& w, const std::vector<Cell>& cells) {
    if (cells.size() < 2 || cells.front() != w.prev || cells.back() != w.next) {
        return "list endpoints do not match the collision window";
    }
    const auto approach = step_heading(w.prev, vertex);
    if (!approach) return "approach step is not a single cardinal move";
    auto prev_index = ring_index(vertex, cells.front());
    if (!prev_index) return "list does not start adjacent to the vertex";
    for (size_t n = 1; n < cells.size(); ++n) {
        const auto idx = ring_index(vertex, cells[n]);
        if (!idx) return "cell " + to_string(cells[n]) + " leaves the collision grid";
        if (*idx != (*prev_index + 1) % 8) {
            return "cells are not consecutive anticlockwise ring steps";
        }
        prev_index = idx;
    }
    if (!strictly_starboard(vertex, *approach, cells[1])) {
        return "first deviation is not to starboard";
    }
    return std::nullopt;
}

inline std::optional<std::string> check_give_way_list(
    const Cell& vertex, const AgentWindow& give, const AgentWindow& stand,
    const std::vector<Cell>& cells) {
    if (cells.empty() || cells.front() != give.prev || cells.back() != give.next) {
        return "list endpoints do not match the collision window";
    }
    auto prev_index = ring_index(vertex, cells.front());
    if (!prev_index) return "list does not start adjacent to the vertex";
    size_t n = 1;
    for (; n < cells.size(); ++n) {
        const auto idx = ring_index(vertex, cells[n]);
        if (!idx || *idx != (*prev_index + 1) % 8) {
            return "ring walk is not consecutive anticlockwise";
        }
        prev_index = idx;
        if (cells[n] == stand.prev) break;
    }
    if (n == cells.size()) return "walk never reaches the stand-on vessel's t-1 cell";
    if (n + 1 == cells.size()) {
        if (cells[n] != give.next) return "walk stops before the t+1 cell";
        return std::nullopt;
    }
    if (n + 3 != cells.size() || cells[n + 1] != vertex ||
        cells[n + 2] != give.next) {
        return "tail after the stand-on cell is not (vertex, t+1 cell)";
    }
    return std::nullopt;
}

}  // namespace detail

// Independent safety and compliance audit: occupancy is recomputed from the
// executed paths alone, and each recorded resolution is checked against the
// geometry its conflict type prescribes.
inline SafetyReport audit(const SimTrace& trace, const GridSpec& spec) {
    (void)spec;
    SafetyReport report;
    const int k = static_cast<int>(trace.executed.size());
    int horizon = 0;
    for (const auto& p : trace.executed) horizon = std::max(horizon, p.length());

    for (int t = 0; t < horizon; ++t) {
        for (int i = 0; i < k; ++i) {
            const auto& pi = trace.executed[static_cast<size_t>(i)];
            if (!pi.occupies_at(t)) continue;
            for (int j = i + 1; j < k; ++j) {
                const auto& pj = trace.executed[static_cast<size_t>(j)];
                if (!pj.occupies_at(t)) continue;
                if (pi.at(t) == pj.at(t)) {
                    report.vertex_violations.push_back(
                        VertexViolation{t, pi.at(t), i, j});
                }
            }
        }
    }

    if (trace.config.swap_policy != SwapPolicy::Ignore) {
        for (int t = 0; t + 1 < horizon; ++t) {
            for (int i = 0; i < k; ++i) {
                const auto& pi = trace.executed[static_cast<size_t>(i)];
                if (!pi.occupies_at(t + 1)) continue;
                for (int j = i + 1; j < k; ++j) {
                    const auto& pj = trace.executed[static_cast<size_t>(j)];
                    if (!pj.occupies_at(t + 1)) continue;
                    if (pi.at(t) != pj.at(t) && pi.at(t) == pj.at(t + 1) &&
                        pi.at(t + 1) == pj.at(t)) {
                        report.swap_violations.push_back(
                            SwapViolation{t, pi.at(t), pj.at(t), i, j});
                    }
                }
            }
        }
    }

    for (size_t r = 0; r < trace.resolutions.size(); ++r) {
        const ResolutionStep& step = trace.resolutions[r].step;
        const Cell vertex = step.conflict.vertex;
        std::optional<std::string> fail;
        if (step.conflict.ctype == ConflictType::HeadOn) {
            fail = detail::check_head_on_list(vertex, step.window.wi,
                                              step.list_i.cells);
            if (!fail) {
                fail = detail::check_head_on_list(vertex, step.window.wj,
                                                  step.list_j.cells);
            }
        } else if (!step.roles) {
            fail = "crossing resolution carries no vessel roles";
        } else {
            const bool i_stands = step.roles->first == VesselRole::StandOn;
            const AgentWindow& ws = i_stands ? step.window.wi : step.window.wj;
            const AgentWindow& wg = i_stands ? step.window.wj : step.window.wi;
            const InsertionList& ls = i_stands ? step.list_i : step.list_j;
            const InsertionList& lg = i_stands ? step.list_j : step.list_i;
            const std::vector<Cell> identity{ws.prev, ws.at, ws.next};
            if (ls.cells != identity) {
                fail = "stand-on vessel's window was modified";
            } else {
                fail = detail::check_give_way_list(vertex, wg, ws, lg.cells);
            }
        }
        report.compliance_findings.push_back(ComplianceFinding{
            static_cast<int>(r), !fail, fail ? *fail : "ok"});
    }
    return report;
}

}  // namespace comcore
