#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "comcore/comcore.hpp"

namespace {

using namespace comcore;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot write " + path);
    }
    out << content;
    if (!out) {
        throw Error(ErrorKind::Io, "short write to " + path);
    }
}

void print_report(const RunReport& r) {
    if (!r.success) {
        std::cout << "status: error (" << (r.error_kind ? to_string(*r.error_kind) : "unknown")
                  << ")\n  " << r.error_message << "\n";
        return;
    }
    std::cout << "status: success\n";
    std::cout << "conflicts resolved: " << r.head_on_resolved << " head-on, "
              << r.crossing_resolved << " crossing (solution list depth "
              << r.sl_depth << ")\n";
    for (const AgentReport& a : r.agents) {
        std::cout << "  agent " << a.id << ": " << a.phase1_moves
                  << " moves planned, " << a.final_moves << " final (deviation +"
                  << a.deviation << ")\n";
    }
    std::printf("wall clock: %.3f ms\n", r.wall_ms);
}

void print_safety(const SafetyReport& report) {
    std::cout << "vertex violations: " << report.vertex_violations.size() << "\n";
    for (const auto& v : report.vertex_violations) {
        std::cout << "  t=" << v.t << " cell " << to_string(v.cell) << " agents "
                  << v.agent_i << "," << v.agent_j << "\n";
    }
    std::cout << "swap violations: " << report.swap_violations.size() << "\n";
    for (const auto& v : report.swap_violations) {
        std::cout << "  t=" << v.t << " edge " << to_string(v.cell_i) << "<->"
                  << to_string(v.cell_j) << " agents " << v.agent_i << ","
                  << v.agent_j << "\n";
    }
    std::cout << "resolutions audited: " << report.compliance_findings.size() << "\n";
    for (const auto& f : report.compliance_findings) {
        std::cout << "  #" << f.resolution_index << " "
                  << (f.pass ? "pass" : "FAIL: " + f.detail) << "\n";
    }
    std::cout << (report.clean() ? "trace is safe and compliant\n"
                                 : "trace has findings\n");
}

Scenario load_scenario_with_overrides(const std::string& path,
                                      std::optional<int> max_iterations,
                                      std::optional<int> trigger) {
    Scenario s = load_scenario(read_file(path));
    if (max_iterations) s.sim.max_iterations = *max_iterations;
    if (trigger) s.sim.trigger_distance_cells = *trigger;
    if (s.sim.max_iterations < 1 || s.sim.trigger_distance_cells < 1) {
        throw Error(ErrorKind::Scenario, "overrides must be >= 1");
    }
    return s;
}

int finish(const RunReport& r) {
    if (r.success) return 0;
    return exit_code_for(r.error_kind.value_or(ErrorKind::Scenario));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grid path planner for surface vessels with rule-compliant "
                 "conflict resolution"};
    app.require_subcommand(1);

    std::string scenario_path, out_path, svg_path, trajectory_path, report_path;
    std::optional<int> opt_max_iterations, opt_trigger;
    int bench_agents = 10, bench_grid = 7, bench_count = 1;
    std::uint64_t bench_seed = 1;

    auto* plan = app.add_subcommand("plan", "Plan conflict-free paths offline");
    plan->add_option("scenario", scenario_path, "scenario JSON file")->required();
    plan->add_option("--out", out_path, "write trajectory JSON here");
    plan->add_option("--svg", svg_path, "write an SVG rendering here");
    plan->add_option("--max-iterations", opt_max_iterations, "override scenario value");
    plan->add_option("--trigger", opt_trigger, "override trigger distance");

    auto* simulate = app.add_subcommand(
        "simulate", "Run the lockstep simulation with distance-triggered replanning");
    simulate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    simulate->add_option("--out", out_path, "write trajectory JSON here");
    simulate->add_option("--svg", svg_path, "write an SVG rendering here");
    simulate->add_option("--max-iterations", opt_max_iterations, "override scenario value");
    simulate->add_option("--trigger", opt_trigger, "override trigger distance");

    auto* check = app.add_subcommand("check", "Audit a trajectory file");
    check->add_option("trajectory", trajectory_path, "trajectory JSON file")->required();

    auto* bench = app.add_subcommand("bench", "Run seeded random scenarios");
    bench->add_option("--agents", bench_agents, "agents per scenario")->required();
    bench->add_option("--grid", bench_grid, "grid side length")->required();
    bench->add_option("--seed", bench_seed, "first seed")->required();
    bench->add_option("--count", bench_count, "number of scenarios")->required();
    bench->add_option("--report", report_path, "write per-seed results here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan->parsed()) {
            const Scenario s =
                load_scenario_with_overrides(scenario_path, opt_max_iterations, opt_trigger);
            const PlanOutcome outcome = run_plan(s);
            print_report(outcome.report);
            if (!outcome.report.success) return finish(outcome.report);
            if (!out_path.empty()) {
                TrajectoryDoc doc{s.name, s.grid, s.sim, outcome.final_solution->paths,
                                  outcome.resolutions, outcome.report};
                write_file(out_path, save_trajectory(doc));
            }
            if (!svg_path.empty()) {
                write_file(svg_path, emit_svg(outcome.final_solution->paths, s.grid));
            }
            return 0;
        }

        if (simulate->parsed()) {
            const Scenario s =
                load_scenario_with_overrides(scenario_path, opt_max_iterations, opt_trigger);
            const SimOutcome outcome = run_simulate(s);
            print_report(outcome.report);
            if (!outcome.report.success) return finish(outcome.report);
            std::cout << "trigger events: " << outcome.trace->triggers.size() << "\n";
            for (const auto& e : outcome.trace->triggers) {
                std::cout << "  t=" << e.t << " agents " << e.agent_i << ","
                          << e.agent_j << "\n";
            }
            if (!out_path.empty()) {
                TrajectoryDoc doc{s.name, s.grid, s.sim, outcome.trace->executed,
                                  outcome.trace->resolutions, outcome.report};
                write_file(out_path, save_trajectory(doc));
            }
            if (!svg_path.empty()) {
                write_file(svg_path, emit_svg(outcome.trace->executed, s.grid));
            }
            return 0;
        }

        if (check->parsed()) {
            const TrajectoryDoc doc = load_trajectory(read_file(trajectory_path));
            const SafetyReport report = check_trajectory(doc);
            print_safety(report);
            return report.clean() ? 0 : 1;
        }

        if (bench->parsed()) {
            std::vector<double> times;
            int successes = 0, window_unavailable = 0, unclassifiable = 0,
                boundary = 0, iteration_limit = 0, other = 0;
            nlohmann::json results = nlohmann::json::array();
            for (int n = 0; n < bench_count; ++n) {
                const std::uint64_t seed = bench_seed + static_cast<std::uint64_t>(n);
                const Scenario s = gen_bench(bench_agents, bench_grid, seed);
                const PlanOutcome outcome = run_plan(s);
                times.push_back(outcome.report.wall_ms);
                nlohmann::json rj = report_json(outcome.report);
                rj["seed"] = seed;
                rj["wall_ms"] = outcome.report.wall_ms;
                results.push_back(rj);
                if (outcome.report.success) {
                    ++successes;
                } else {
                    switch (*outcome.report.error_kind) {
                        case ErrorKind::WindowUnavailable: ++window_unavailable; break;
                        case ErrorKind::Unclassifiable: ++unclassifiable; break;
                        case ErrorKind::BoundaryResolution: ++boundary; break;
                        case ErrorKind::IterationLimit: ++iteration_limit; break;
                        default: ++other; break;
                    }
                }
            }
            std::vector<double> sorted = times;
            std::sort(sorted.begin(), sorted.end());
            const double median = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
            std::cout << "scenarios: " << bench_count << " (agents " << bench_agents
                      << ", grid " << bench_grid << "x" << bench_grid << ")\n";
            std::cout << "resolved conflict-free: " << successes << "\n";
            std::cout << "window unavailable: " << window_unavailable
                      << ", unclassifiable: " << unclassifiable
                      << ", boundary: " << boundary
                      << ", iteration limit: " << iteration_limit
                      << ", other: " << other << "\n";
            std::printf("median wall clock: %.3f ms\n", median);
            if (!report_path.empty()) {
                nlohmann::json doc;
                doc["results"] = results;
                doc["summary"] = {{"count", bench_count},
                                  {"success", successes},
                                  {"window_unavailable", window_unavailable},
                                  {"unclassifiable", unclassifiable},
                                  {"boundary", boundary},
                                  {"iteration_limit", iteration_limit},
                                  {"other", other},
                                  {"median_wall_ms", median}};
                write_file(report_path, doc.dump(2) + "\n");
            }
            return other == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 0;
}
