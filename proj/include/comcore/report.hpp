#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "comcore/astar.hpp"
#include "comcore/resolver.hpp"
#include "comcore/scenario.hpp"
#include "comcore/sim.hpp"

namespace comcore {

struct AgentReport {
    int id = 0;
    int phase1_moves = 0;
    int final_moves = 0;
    int deviation = 0;
};

struct RunReport {
    bool success = false;
    std::optional<ErrorKind> error_kind;
    std::string error_message;
    std::vector<AgentReport> agents;
    int head_on_resolved = 0;
    int crossing_resolved = 0;
    int sl_depth = 0;
    // Wall-clock time is console-only; it never goes into output files, so
    // repeated runs stay byte-identical.
    double wall_ms = 0.0;
};

struct PlanOutcome {
    RunReport report;
    std::optional<Solution> phase1;
    std::optional<Solution> final_solution;
    std::vector<AppliedResolution> resolutions;
};

struct SimOutcome {
    RunReport report;
    std::optional<SimTrace> trace;
};

namespace detail {

inline void fill_agent_reports(RunReport& report,
                               const std::vector<TimedPath>& phase1,
                               const std::vector<TimedPath>& final_paths) {
    report.agents.clear();
    for (size_t i = 0; i < phase1.size(); ++i) {
        AgentReport a;
        a.id = static_cast<int>(i);
        a.phase1_moves = phase1[i].moves();
        a.final_moves = final_paths[i].moves();
        a.deviation = a.final_moves - a.phase1_moves;
        report.agents.push_back(a);
    }
}

inline void count_resolutions(RunReport& report,
                              const std::vector<AppliedResolution>& resolutions) {
    report.head_on_resolved = 0;
    report.crossing_resolved = 0;
    for (const auto& r : resolutions) {
        if (r.step.conflict.ctype == ConflictType::HeadOn) {
            ++report.head_on_resolved;
        } else {
            ++report.crossing_resolved;
        }
    }
}

}  // namespace detail

// Offline pipeline: independent plans, then phase-2 until conflict-free.
// Errors land in the report rather than propagating, so callers can map
// them to exit codes uniformly.
inline PlanOutcome run_plan(const Scenario& scenario) {
    PlanOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Solution phase1 = plan_all(scenario.grid, scenario.agents);
        out.phase1 = phase1;
        Phase2Result ph2 = phase2(scenario.grid, phase1, scenario.sim.max_iterations);
        for (size_t n = 1; n < ph2.chain.size(); ++n) {
            out.resolutions.push_back(AppliedResolution{*ph2.chain[n].resolved, 0});
        }
        out.final_solution = ph2.goal().solution;
        out.report.success = true;
        out.report.sl_depth = static_cast<int>(ph2.chain.size());
        detail::fill_agent_reports(out.report, phase1.paths,
                                   out.final_solution->paths);
        detail::count_resolutions(out.report, out.resolutions);
    } catch (const Error& e) {
        out.report.success = false;
        out.report.error_kind = e.kind();
        out.report.error_message = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.report.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

// Online pipeline: lockstep simulation with distance-triggered replanning.
inline SimOutcome run_simulate(const Scenario& scenario) {
    SimOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        SimTrace trace = run_sim(scenario.grid, scenario.agents, scenario.sim);
        out.report.success = true;
        out.report.sl_depth = static_cast<int>(trace.resolutions.size()) + 1;
        detail::fill_agent_reports(out.report, trace.phase1, trace.executed);
        detail::count_resolutions(out.report, trace.resolutions);
        out.trace = std::move(trace);
    } catch (const Error& e) {
        out.report.success = false;
        out.report.error_kind = e.kind();
        out.report.error_message = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.report.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

}  // namespace comcore
