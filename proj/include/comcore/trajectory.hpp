#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "comcore/report.hpp"
#include "comcore/scenario.hpp"
#include "comcore/sim.hpp"

namespace comcore {

// Self-contained record of one run: the grid, every agent's waypoints with
// timesteps and meter coordinates, the resolutions that shaped the paths,
// and the run report. `check` re-audits these files from scratch.
struct TrajectoryDoc {
    std::string name;
    GridSpec grid{1, 1};
    SimConfig sim;
    std::vector<TimedPath> paths;
    std::vector<AppliedResolution> resolutions;
    RunReport report;
};

namespace detail {

inline nlohmann::json window_json(const AgentWindow& w) {
    nlohmann::json j;
    j["prev"] = cell_json(w.prev);
    j["at"] = cell_json(w.at);
    j["next"] = cell_json(w.next);
    return j;
}

inline AgentWindow parse_window(const nlohmann::json& j, const std::string& where) {
    AgentWindow w;
    w.prev = parse_cell(j.at("prev"), where);
    w.at = parse_cell(j.at("at"), where);
    w.next = parse_cell(j.at("next"), where);
    return w;
}

inline nlohmann::json cells_json(const std::vector<Cell>& cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Cell& c : cells) arr.push_back(cell_json(c));
    return arr;
}

}  // namespace detail

inline RunReport parse_report(const nlohmann::json& j) {
    RunReport r;
    r.success = j.value("status", std::string{}) == "success";
    if (j.contains("error") && j["error"].is_object()) {
        r.error_message = j["error"].value("message", std::string{});
        const std::string kind = j["error"].value("kind", std::string{});
        for (int k = 0; k <= static_cast<int>(ErrorKind::Io); ++k) {
            if (kind == to_string(static_cast<ErrorKind>(k))) {
                r.error_kind = static_cast<ErrorKind>(k);
            }
        }
    }
    for (const auto& a : j.value("agents", nlohmann::json::array())) {
        r.agents.push_back(AgentReport{a.value("id", 0), a.value("phase1_moves", 0),
                                       a.value("final_moves", 0),
                                       a.value("deviation", 0)});
    }
    if (j.contains("conflicts_resolved")) {
        r.head_on_resolved = j["conflicts_resolved"].value("head_on", 0);
        r.crossing_resolved = j["conflicts_resolved"].value("crossing", 0);
    }
    r.sl_depth = j.value("sl_depth", 0);
    return r;
}

inline nlohmann::json report_json(const RunReport& r) {
    nlohmann::json j;
    j["status"] = r.success ? "success" : "error";
    if (!r.success) {
        j["error"] = {{"kind", r.error_kind ? to_string(*r.error_kind) : "unknown"},
                      {"message", r.error_message}};
    }
    nlohmann::json agents = nlohmann::json::array();
    for (const AgentReport& a : r.agents) {
        agents.push_back({{"id", a.id},
                          {"phase1_moves", a.phase1_moves},
                          {"final_moves", a.final_moves},
                          {"deviation", a.deviation}});
    }
    j["agents"] = agents;
    j["conflicts_resolved"] = {{"head_on", r.head_on_resolved},
                               {"crossing", r.crossing_resolved}};
    j["sl_depth"] = r.sl_depth;
    return j;
}

inline std::string save_trajectory(const TrajectoryDoc& doc) {
    nlohmann::json j;
    j["name"] = doc.name;
    j["grid"] = {{"cols", doc.grid.cols()},
                 {"rows", doc.grid.rows()},
                 {"cell_size_m", doc.grid.cell_size_m()}};
    j["grid"]["blocked"] = nlohmann::json::array();
    for (const Cell& c : doc.grid.blocked()) {
        j["grid"]["blocked"].push_back(detail::cell_json(c));
    }
    j["sim"] = {{"trigger_distance_cells", doc.sim.trigger_distance_cells},
                {"swap_policy", to_string(doc.sim.swap_policy)},
                {"max_iterations", doc.sim.max_iterations}};

    nlohmann::json agents = nlohmann::json::array();
    for (const TimedPath& p : doc.paths) {
        nlohmann::json waypoints = nlohmann::json::array();
        for (int t = 0; t < p.length(); ++t) {
            const auto [x_m, y_m] = cell_center(doc.grid, p.at(t));
            waypoints.push_back({{"t", t},
                                 {"cell", detail::cell_json(p.at(t))},
                                 {"pos_m", nlohmann::json::array({x_m, y_m})}});
        }
        agents.push_back({{"id", p.agent_id}, {"waypoints", waypoints}});
    }
    j["agents"] = agents;

    nlohmann::json resolutions = nlohmann::json::array();
    for (const AppliedResolution& r : doc.resolutions) {
        nlohmann::json rj;
        rj["t"] = r.step.conflict.t;
        rj["trigger_t"] = r.trigger_t;
        rj["vertex"] = detail::cell_json(r.step.conflict.vertex);
        rj["agents"] = {r.step.conflict.agent_i, r.step.conflict.agent_j};
        rj["ctype"] = to_string(r.step.conflict.ctype);
        if (r.step.roles) {
            const bool i_stands = r.step.roles->first == VesselRole::StandOn;
            rj["roles"] = {
                {"stand_on", i_stands ? r.step.conflict.agent_i : r.step.conflict.agent_j},
                {"give_way", i_stands ? r.step.conflict.agent_j : r.step.conflict.agent_i}};
        } else {
            rj["roles"] = nullptr;
        }
        rj["window"] = {detail::window_json(r.step.window.wi),
                        detail::window_json(r.step.window.wj)};
        rj["lists"] = {detail::cells_json(r.step.list_i.cells),
                       detail::cells_json(r.step.list_j.cells)};
        resolutions.push_back(rj);
    }
    j["resolutions"] = resolutions;
    j["report"] = report_json(doc.report);
    return j.dump(2) + "\n";
}

inline TrajectoryDoc load_trajectory(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Scenario, std::string("trajectory parse error: ") + e.what());
    }
    TrajectoryDoc doc;
    try {
        doc.name = j.value("name", std::string{});
        const auto& g = j.at("grid");
        std::set<Cell> blocked;
        for (const auto& b : g.value("blocked", nlohmann::json::array())) {
            blocked.insert(detail::parse_cell(b, "grid.blocked"));
        }
        doc.grid = GridSpec(g.at("cols").get<int>(), g.at("rows").get<int>(),
                            g.value("cell_size_m", 10.0), std::move(blocked));
        if (j.contains("sim")) {
            const auto& sim = j["sim"];
            doc.sim.trigger_distance_cells =
                sim.value("trigger_distance_cells", doc.sim.trigger_distance_cells);
            doc.sim.max_iterations = sim.value("max_iterations", doc.sim.max_iterations);
            if (sim.contains("swap_policy")) {
                const auto p = parse_swap_policy(sim["swap_policy"].get<std::string>());
                if (!p) {
                    throw Error(ErrorKind::Scenario, "unknown swap_policy");
                }
                doc.sim.swap_policy = *p;
            }
        }
        for (const auto& a : j.at("agents")) {
            TimedPath p;
            p.agent_id = a.at("id").get<int>();
            for (const auto& w : a.at("waypoints")) {
                p.waypoints.push_back(detail::parse_cell(w.at("cell"), "waypoint"));
            }
            doc.paths.push_back(std::move(p));
        }
        for (const auto& rj : j.value("resolutions", nlohmann::json::array())) {
            AppliedResolution r;
            r.trigger_t = rj.value("trigger_t", 0);
            r.step.conflict.t = rj.at("t").get<int>();
            r.step.conflict.vertex = detail::parse_cell(rj.at("vertex"), "resolution vertex");
            r.step.conflict.agent_i = rj.at("agents")[0].get<int>();
            r.step.conflict.agent_j = rj.at("agents")[1].get<int>();
            const std::string ctype = rj.at("ctype").get<std::string>();
            if (ctype == "head_on") {
                r.step.conflict.ctype = ConflictType::HeadOn;
            } else if (ctype == "crossing") {
                r.step.conflict.ctype = ConflictType::Crossing;
            } else {
                throw Error(ErrorKind::Scenario, "unknown ctype " + ctype);
            }
            r.step.window.agent_i = r.step.conflict.agent_i;
            r.step.window.agent_j = r.step.conflict.agent_j;
            r.step.window.t = r.step.conflict.t;
            r.step.window.wi = detail::parse_window(rj.at("window")[0], "window");
            r.step.window.wj = detail::parse_window(rj.at("window")[1], "window");
            if (!rj.at("roles").is_null()) {
                const int stand = rj["roles"].at("stand_on").get<int>();
                if (stand == r.step.conflict.agent_i) {
                    r.step.roles = {VesselRole::StandOn, VesselRole::GiveWay};
                } else {
                    r.step.roles = {VesselRole::GiveWay, VesselRole::StandOn};
                }
            }
            r.step.list_i.agent_id = r.step.conflict.agent_i;
            r.step.list_j.agent_id = r.step.conflict.agent_j;
            r.step.list_i.splice_start_t = r.step.conflict.t - 1;
            r.step.list_j.splice_start_t = r.step.conflict.t - 1;
            for (const auto& c : rj.at("lists")[0]) {
                r.step.list_i.cells.push_back(detail::parse_cell(c, "list"));
            }
            for (const auto& c : rj.at("lists")[1]) {
                r.step.list_j.cells.push_back(detail::parse_cell(c, "list"));
            }
            doc.resolutions.push_back(std::move(r));
        }
        if (j.contains("report")) {
            doc.report = parse_report(j["report"]);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Scenario, std::string("trajectory field error: ") + e.what());
    }
    return doc;
}

// Re-audit a trajectory file: occupancy and swaps recomputed from the
// waypoints, compliance re-derived from the recorded windows and lists.
inline SafetyReport check_trajectory(const TrajectoryDoc& doc) {
    SimTrace trace;
    trace.config = doc.sim;
    trace.executed = doc.paths;
    trace.resolutions = doc.resolutions;
    return audit(trace, doc.grid);
}

}  // namespace comcore
